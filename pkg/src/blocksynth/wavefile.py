"""Minimal RIFF/WAVE writer: 32-bit float PCM, little-endian, plain
44-byte header (format code 3, no fact chunk)."""
from __future__ import annotations

import struct

import numpy as np

__all__ = ["write_wav_float32"]


def write_wav_float32(path: str, samples: np.ndarray, sr: int) -> int:
    """Write interleaved float32 samples shaped (frames, channels).
    Returns the number of frames written."""
    if samples.ndim != 2:
        raise ValueError("samples must be shaped (frames, channels)")
    data = np.ascontiguousarray(samples, dtype="<f4").tobytes()
    frames, channels = samples.shape
    block_align = 4 * channels
    header = b"RIFF" + struct.pack("<I", 36 + len(data)) + b"WAVE"
    header += b"fmt " + struct.pack(
        "<IHHIIHH", 16, 3, channels, sr, sr * block_align, block_align, 32
    )
    header += b"data" + struct.pack("<I", len(data))
    with open(path, "wb") as f:
        f.write(header)
        f.write(data)
    return frames
