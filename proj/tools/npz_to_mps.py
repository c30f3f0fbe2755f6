# Copyright 2026 The optlp Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Convert linprog benchmark archives (.npz with c, A_ub, b_ub, A_eq, b_eq) to MPS.

Usage: npz_to_mps.py OUT_DIR FILE.npz [FILE.npz ...]

Inequality rows become L rows, equality rows E rows; all variables keep the
default bound x >= 0 (archives with explicit bounds are rejected).
"""

import pathlib
import sys

import numpy as np


def fmt(v):
    return repr(float(v))


def convert(path, out_dir):
    d = np.load(path, allow_pickle=True)
    if d["bounds"].size:
        raise SystemExit(f"{path}: explicit bounds are not supported")
    name = pathlib.Path(path).stem
    c = d["c"]
    blocks = [("L", d["A_ub"], d["b_ub"]), ("E", d["A_eq"], d["b_eq"])]
    rows = []
    for kind, a, b in blocks:
        for i in range(a.shape[0]):
            rows.append((kind, f"R{len(rows) + 1}", a[i], b[i]))
    lines = [f"NAME          {name}", "ROWS", " N  COST"]
    lines += [f" {kind}  {rname}" for kind, rname, _, _ in rows]
    lines.append("COLUMNS")
    for j in range(c.shape[0]):
        col = f"C{j + 1}"
        if c[j] != 0 or not any(row[2][j] != 0 for row in rows):
            lines.append(f"    {col}  COST  {fmt(c[j])}")
        for _, rname, a, _ in rows:
            if a[j] != 0:
                lines.append(f"    {col}  {rname}  {fmt(a[j])}")
    lines.append("RHS")
    lines += [f"    RHS  {rname}  {fmt(b)}" for _, rname, _, b in rows if b != 0]
    lines.append("ENDATA")
    out = pathlib.Path(out_dir) / f"{name.lower()}.mps"
    out.write_text("\n".join(lines) + "\n")
    print(f"{out}: {len(rows)} rows, {c.shape[0]} columns, optimum {float(d['obj'])!r}")


def main(argv):
    if len(argv) < 3:
        raise SystemExit(__doc__)
    for p in argv[2:]:
        convert(p, argv[1])


if __name__ == "__main__":
    main(sys.argv)
