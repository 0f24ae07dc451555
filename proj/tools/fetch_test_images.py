#!/usr/bin/env python3
"""Export the scikit-image sample images used by the tests and table1 as PGM.

Usage: python3 tools/fetch_test_images.py [outdir]   (default: data/)

camera.pgm is checksum-pinned: the sha256 of its raster bytes must match
CAMERA_SHA256 or the script exits non-zero.
"""
import hashlib
import pathlib
import sys

import numpy as np
from skimage import color, data

CAMERA_SHA256 = "5cb24482a53416f99052258be2b1ee38cd31c559a70c8a8b321cba231b332e21"

EXTRA = {
    "astronaut": lambda: np.round(color.rgb2gray(data.astronaut()) * 255).astype(np.uint8),
    "brick": data.brick,
    "grass": data.grass,
    "gravel": data.gravel,
    "moon": data.moon,
}


def write_pgm(path, img):
    img = np.ascontiguousarray(img, dtype=np.uint8)
    h, w = img.shape
    path.write_bytes(b"P5\n%d %d\n255\n" % (w, h) + img.tobytes())


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out.mkdir(parents=True, exist_ok=True)

    camera = np.ascontiguousarray(data.camera(), dtype=np.uint8)
    digest = hashlib.sha256(camera.tobytes()).hexdigest()
    if digest != CAMERA_SHA256:
        sys.exit(f"camera checksum mismatch: {digest}")
    write_pgm(out / "camera.pgm", camera)

    for name, load in EXTRA.items():
        img = load()
        h, w = img.shape
        # Largest power-of-two square from the top-left corner.
        side = 1 << (min(h, w).bit_length() - 1)
        write_pgm(out / f"{name}.pgm", img[:side, :side])
    print(f"wrote {1 + len(EXTRA)} images to {out}")


if __name__ == "__main__":
    main()
