"""Low-level raster operations shared by saliency, transforms, and corruptions.

All images are float64 arrays in [0, 1]: 2-D (H, W) grayscale or 3-D (H, W, 3)
RGB. Conventions pinned here (and mirrored by the naive test oracles):

- grayscale = 0.299 R + 0.587 G + 0.114 B
- bilinear resize uses half-pixel centers with edge clamping
- out-of-bounds samples fold back with reflect-101 indexing (edge not repeated)
- box/Gaussian filters replicate edges (scipy ``mode="nearest"``)
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

GRAY_WEIGHTS = np.array([0.299, 0.587, 0.114])


def to_gray(image: np.ndarray) -> np.ndarray:
    """Luma grayscale of an (H, W, 3) image."""
    return image @ GRAY_WEIGHTS


def resize_bilinear(arr: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize of a 2-D or 3-D array to (out_h, out_w).

    Half-pixel-center convention: output pixel i samples source coordinate
    (i + 0.5) * scale - 0.5, clamped to the valid range. Resizing to the
    source size is an exact identity.
    """
    in_h, in_w = arr.shape[:2]
    if (in_h, in_w) == (out_h, out_w):
        return arr.copy()

    ys = (np.arange(out_h) + 0.5) * (in_h / out_h) - 0.5
    xs = (np.arange(out_w) + 0.5) * (in_w / out_w) - 0.5
    ys = np.clip(ys, 0.0, in_h - 1.0)
    xs = np.clip(xs, 0.0, in_w - 1.0)

    y0 = np.floor(ys).astype(int)
    x0 = np.floor(xs).astype(int)
    y1 = np.minimum(y0 + 1, in_h - 1)
    x1 = np.minimum(x0 + 1, in_w - 1)
    wy = (ys - y0).reshape(-1, 1)
    wx = (xs - x0).reshape(1, -1)
    if arr.ndim == 3:
        wy = wy[..., None]
        wx = wx[..., None]

    a = arr[np.ix_(y0, x0)]
    b = arr[np.ix_(y0, x1)]
    c = arr[np.ix_(y1, x0)]
    d = arr[np.ix_(y1, x1)]
    top = a * (1.0 - wx) + b * wx
    bot = c * (1.0 - wx) + d * wx
    return top * (1.0 - wy) + bot * wy


def reflect_index(idx: np.ndarray, n: int) -> np.ndarray:
    """Fold integer indices into [0, n) with reflect-101 boundary handling.

    Pattern for n=4: ... 2 1 | 0 1 2 3 | 2 1 0 ... (edge samples not doubled).
    """
    if n == 1:
        return np.zeros_like(idx)
    period = 2 * (n - 1)
    idx = np.abs(idx) % period
    return np.where(idx >= n, period - idx, idx)


def sample_bilinear_reflect(arr: np.ndarray, ys: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Sample a 2-D or 3-D array at fractional (ys, xs) with reflect-101 padding."""
    h, w = arr.shape[:2]
    y0 = np.floor(ys).astype(int)
    x0 = np.floor(xs).astype(int)
    wy = ys - y0
    wx = xs - x0
    if arr.ndim == 3:
        wy = wy[..., None]
        wx = wx[..., None]

    y0r = reflect_index(y0, h)
    y1r = reflect_index(y0 + 1, h)
    x0r = reflect_index(x0, w)
    x1r = reflect_index(x0 + 1, w)

    a = arr[y0r, x0r]
    b = arr[y0r, x1r]
    c = arr[y1r, x0r]
    d = arr[y1r, x1r]
    top = a * (1.0 - wx) + b * wx
    bot = c * (1.0 - wx) + d * wx
    return top * (1.0 - wy) + bot * wy


def box_filter3(arr: np.ndarray) -> np.ndarray:
    """3x3 mean filter with replicated edges."""
    return ndimage.uniform_filter(arr, size=3, mode="nearest")


def gaussian_blur(arr: np.ndarray, sigma: float) -> np.ndarray:
    """Gaussian blur with replicated edges, kernel truncated at 3 sigma."""
    return ndimage.gaussian_filter(arr, sigma=sigma, mode="nearest", truncate=3.0)
