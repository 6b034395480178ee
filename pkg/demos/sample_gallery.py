"""Render a contact sheet of generated sequences from a trained checkpoint.

Each reference image gets one block: the first row holds the ground-truth
frames, then every sampled latent adds three rows (generated frames, backward
flow colour coding, and the grey/magenta motion overlay against the reference).

    python demos/sample_gallery.py --checkpoint runs/desk/checkpoint.iflw \
        --data runs/desk-data/test --references 4 --samples 3 --out demos/gallery.png
"""

import argparse
from pathlib import Path

import numpy as np

from bidiflow.data import read_dataset
from bidiflow.io_formats import flow_to_color, motion_overlay, save_png
from bidiflow.metrics import latent_draws, psnr
from bidiflow.training import load_model


def tile(rows: list[list[np.ndarray]], pad: int = 2) -> np.ndarray:
    h, w = rows[0][0].shape[:2]
    cols = max(len(r) for r in rows)
    sheet = np.ones((len(rows) * (h + pad) + pad, cols * (w + pad) + pad, 3), np.float32)
    for i, row in enumerate(rows):
        for j, img in enumerate(row):
            y, x = pad + i * (h + pad), pad + j * (w + pad)
            sheet[y:y + h, x:x + w] = img
    return sheet


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--checkpoint", default="runs/desk/checkpoint.iflw")
    ap.add_argument("--data", default="runs/desk-data/test")
    ap.add_argument("--references", type=int, default=4)
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="demos/gallery.png")
    args = ap.parse_args(argv)

    model = load_model(args.checkpoint)[0]
    sequences = read_dataset(args.data)[: args.references]
    blank = np.ones((model.config.image_size,) * 2 + (3,), np.float32)
    rows = []
    for i, seq in enumerate(sequences):
        ref = seq.frames[0]
        rows.append(list(seq.frames))
        z = latent_draws(args.seed + i, args.samples, model.config.latent_dim)
        frames, det = model.sample_sequence(np.repeat(ref[None], args.samples, 0), z=z, return_details=True)
        for s in range(args.samples):
            scale = float(np.abs(det["bwd"][s]).max()) or 1.0
            rows.append([ref, *frames[s]])
            rows.append([blank, *(flow_to_color(f, scale) for f in det["bwd"][s])])
            rows.append([blank, *(motion_overlay(ref, f) for f in frames[s])])
            score = np.mean([psnr(a, b) for a, b in zip(frames[s], seq.frames[1:])])
            print(f"reference {i} sample {s}: max |flow| {scale:.2f} px, PSNR vs ground truth {score:.2f} dB")
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    save_png(args.out, tile(rows))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
