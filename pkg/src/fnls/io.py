"""FNLS1 field snapshot files.

Layout (little-endian throughout): magic bytes 'FNLS', u32 version = 1,
u32 dimension d, then per axis u64 n_j followed by f64 L_j, then the
complex samples as interleaved (f64 re, f64 im), row-major, last axis
fastest.
"""

import struct

import numpy as np

from .grid import ComplexField, Grid

MAGIC = b"FNLS"
VERSION = 1


def write_field(path, field):
    """Write a ComplexField to an FNLS1 file."""
    grid = field.grid
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<II", VERSION, grid.d))
        for nj, Lj in zip(grid.n, grid.L):
            fh.write(struct.pack("<Qd", nj, Lj))
        np.ascontiguousarray(field.values, dtype="<c16").tofile(fh)


def read_field(path):
    """Read an FNLS1 file back into a ComplexField."""
    with open(path, "rb") as fh:
        if fh.read(4) != MAGIC:
            raise ValueError(f"{path}: not an FNLS1 file")
        version, d = struct.unpack("<II", fh.read(8))
        if version != VERSION:
            raise ValueError(f"{path}: unsupported FNLS version {version}")
        n, L = [], []
        for _ in range(d):
            nj, Lj = struct.unpack("<Qd", fh.read(16))
            n.append(nj)
            L.append(Lj)
        grid = Grid(d, tuple(n), tuple(L))
        values = np.fromfile(fh, dtype="<c16", count=grid.total_points)
    if values.size != grid.total_points:
        raise ValueError(f"{path}: truncated sample data")
    return ComplexField(grid, values.reshape(grid.shape))
