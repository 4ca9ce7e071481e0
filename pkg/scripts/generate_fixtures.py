"""Regenerate the fixture files under data/.

Each harmonic frame E_m (m = 3..15) and the optimal quadrilateral are
written twice: as a full-precision CSV matrix usable with
``optiframe beta --matrix`` and as a JSON bundle with the frame, its
edge polygon, and the exact condition number.
"""

from __future__ import annotations

import os
import sys

from optiframe.cli import json_text
from optiframe.constructions import harmonic_frame, optimal_frame_m4, pair_from_tight_frame
from optiframe.frames import Frame


def matrix_csv_text(frame: Frame) -> str:
    return "".join(f"{x!r},{y!r}\n" for x, y in frame.vectors)


def fixture_files() -> dict[str, str]:
    """Map fixture file name to its exact content."""
    out: dict[str, str] = {}
    for m in range(3, 16):
        frame = harmonic_frame(m)
        out[f"e{m}.csv"] = matrix_csv_text(frame)
        out[f"e{m}.json"] = json_text(pair_from_tight_frame(frame).to_json_dict())
    special = optimal_frame_m4()
    out["e4prime.csv"] = matrix_csv_text(special)
    out["e4prime.json"] = json_text(pair_from_tight_frame(special).to_json_dict())
    return out


def main(outdir: str = "data") -> int:
    os.makedirs(outdir, exist_ok=True)
    for name, text in sorted(fixture_files().items()):
        with open(os.path.join(outdir, name), "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {outdir}/{name}")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
