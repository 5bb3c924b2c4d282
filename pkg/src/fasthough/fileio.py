"""PGM input, FHT1 raster files and CSV output."""

from __future__ import annotations

import csv
import decimal
import struct
from fractions import Fraction

import numpy as np

RASTER_MAGIC = b"FHT1"
RASTER_HEADER = struct.Struct("<4sIIB")
DTYPE_INT64 = 0
MAX_PGM_MAXVAL = 65535
CSV_DIGITS = 12


class FormatError(IOError):
    """A file is malformed, truncated or uses an unsupported feature."""


def _pgm_tokens(data, count, pos):
    # Whitespace-separated header fields; '#' starts a comment up to EOL.
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and (data[pos : pos + 1].isspace() or data[pos : pos + 1] == b"#"):
            if data[pos : pos + 1] == b"#":
                while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            else:
                pos += 1
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise FormatError("truncated PGM header")
        tokens.append(data[start:pos])
    return tokens, pos


def parse_pgm(data):
    """Decode P2 or P5 PGM bytes into an int64 array of shape ``(h, w)``."""
    if len(data) < 2 or data[:2] not in (b"P2", b"P5"):
        raise FormatError("not a P2/P5 PGM file")
    magic = data[:2]
    fields, pos = _pgm_tokens(data, 3, 2)
    try:
        w, h, maxval = (int(f) for f in fields)
    except ValueError:
        raise FormatError(f"bad PGM header fields {fields!r}") from None
    if w < 1 or h < 1:
        raise FormatError(f"bad PGM size {w}x{h}")
    if not 1 <= maxval <= MAX_PGM_MAXVAL:
        raise FormatError(f"unsupported PGM maxval {maxval}")

    if magic == b"P5":
        # exactly one whitespace byte separates the header from raster data
        pos += 1
        dtype = ">u1" if maxval < 256 else ">u2"
        nbytes = w * h * np.dtype(dtype).itemsize
        payload = data[pos : pos + nbytes]
        if len(payload) < nbytes:
            raise FormatError(f"truncated PGM payload: {len(payload)} of {nbytes} bytes")
        img = np.frombuffer(payload, dtype=dtype).astype(np.int64)
    else:
        body = data[pos:].split()
        if len(body) < w * h:
            raise FormatError(f"truncated PGM payload: {len(body)} of {w * h} samples")
        try:
            img = np.array([int(v) for v in body[: w * h]], dtype=np.int64)
        except ValueError:
            raise FormatError("non-numeric sample in P2 data") from None
    if img.size and (img.min() < 0 or img.max() > maxval):
        raise FormatError(f"sample outside [0, {maxval}]")
    return img.reshape(h, w)


def read_pgm(path):
    with open(path, "rb") as f:
        return parse_pgm(f.read())


def write_pgm(path, img, maxval=None, binary=True):
    img = np.asarray(img)
    h, w = img.shape
    if maxval is None:
        maxval = max(int(img.max()), 1)
    if img.min() < 0 or maxval > MAX_PGM_MAXVAL or img.max() > maxval:
        raise ValueError("PGM samples must lie in [0, maxval <= 65535]")
    with open(path, "wb") as f:
        f.write(b"P5\n" if binary else b"P2\n")
        f.write(f"{w} {h}\n{maxval}\n".encode())
        if binary:
            f.write(img.astype(">u1" if maxval < 256 else ">u2").tobytes())
        else:
            for row in img:
                f.write((" ".join(str(int(v)) for v in row) + "\n").encode())


def write_raster(path, img):
    """Write an integer grid as FHT1: header then little-endian int64, x fastest."""
    a = np.asarray(img)
    if a.ndim != 2:
        raise ValueError(f"raster must be 2-D, got shape {a.shape}")
    h, w = a.shape
    with open(path, "wb") as f:
        f.write(RASTER_HEADER.pack(RASTER_MAGIC, w, h, DTYPE_INT64))
        f.write(np.ascontiguousarray(a, dtype="<i8").tobytes())


def parse_raster(data):
    if len(data) < RASTER_HEADER.size:
        raise FormatError("raster file shorter than its header")
    magic, w, h, dtype = RASTER_HEADER.unpack_from(data)
    if magic != RASTER_MAGIC:
        raise FormatError(f"bad raster magic {magic!r}")
    if dtype != DTYPE_INT64:
        raise FormatError(f"unsupported raster dtype code {dtype}")
    nbytes = w * h * 8
    payload = data[RASTER_HEADER.size :]
    if len(payload) != nbytes:
        raise FormatError(f"raster payload is {len(payload)} bytes, expected {nbytes}")
    return np.frombuffer(payload, dtype="<i8").astype(np.int64).reshape(h, w)


def read_raster(path):
    with open(path, "rb") as f:
        return parse_raster(f.read())


def read_image(path):
    """Read a PGM or FHT1 file, chosen by its leading magic bytes."""
    with open(path, "rb") as f:
        data = f.read()
    if data[:4] == RASTER_MAGIC:
        return parse_raster(data)
    return parse_pgm(data)


def write_grid_csv(path, grid):
    with open(path, "w", newline="") as f:
        csv.writer(f).writerows(np.asarray(grid).tolist())


def format_number(value):
    """Render a number for CSV output at 12 significant digits, half-even.

    Integers are written in full; ``None`` becomes an empty field.
    """
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    ctx = decimal.Context(prec=CSV_DIGITS, rounding=decimal.ROUND_HALF_EVEN)
    if isinstance(value, Fraction):
        d = ctx.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator))
    else:
        d = ctx.plus(decimal.Decimal(value))
    if d == d.to_integral_value():
        d = d.quantize(decimal.Decimal(1))
    else:
        d = d.normalize(ctx)
    return format(d, "f")
