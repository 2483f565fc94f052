"""Regenerate the golden table CSVs from the LaTeX source of the tables.

Usage: python tools/extract_tables.py SOURCE.md src/negabeta/data
"""

import csv
import re
import sys
from collections import Counter
from pathlib import Path

from negabeta.polynomial import parse_polynomial

ERRATA = "errata: resolved by recomputation"


def table_rows(tex: str, label: str):
    end = tex.index(f"\\label{{{label}}}")
    start = tex.rindex("\\begin{tabular}", 0, end)
    body = tex[start:end]
    rows = []
    for chunk in body.split("\\hline"):
        perms = re.findall(r"(?<![\d.])\d{4,5}(?![\d.])", chunk)
        cells = [c.strip() for c in chunk.split("\\\\")[0].split("&")]
        if len(cells) < 3 or not perms:
            continue
        value = re.sub(r"[^0-9.]", "", re.sub(r"\\multirow\{\d+\}\{\*\}", "", cells[1]))
        poly = re.sub(r"\\multirow\{\d+\}\{\*\}", "", cells[2])
        poly = poly.replace("$", "").replace("{", "").replace("}", "").replace("\\beta", "b").strip()
        poly = parse_polynomial(poly).text()
        rows.append((sorted(set(perms)), value, poly))
    return rows


def main(src, outdir):
    tex = Path(src).read_text()
    for label, name in (("tab:4", "table_len4.csv"), ("tab:5", "table_len5.csv")):
        rows = table_rows(tex, label)
        counts = Counter(p for perms, _, _ in rows for p in perms)
        with open(Path(outdir) / name, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["perm", "bbar", "polynomial", "note"])
            for perms, value, poly in rows:
                for p in perms:
                    w.writerow([p, value, poly, ERRATA if counts[p] > 1 else ""])


if __name__ == "__main__":
    main(*sys.argv[1:3])
