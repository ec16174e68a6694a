"""Static SVG rendering of harness CSV files.

Purely presentational: reads a CSV written by the experiment harness
(header row, '#'-prefixed footers) and draws a scatter/curve plot.
No data transformation happens here beyond dropping blank cells.
"""
from __future__ import annotations

import csv

from .errors import MalformedCsv


def _load(csv_path: str) -> tuple[list[str], list[list[str]]]:
    with open(csv_path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(line for line in fh if not line.startswith("#"))
        table = [row for row in reader if row]
    if not table:
        raise MalformedCsv(f"{csv_path}: no header row")
    header, rows = table[0], table[1:]
    if not rows:
        raise MalformedCsv(f"{csv_path}: no data rows")
    return header, rows


def emit_svg_scatter(
    csv_path: str,
    svg_path: str,
    x: str,
    y: tuple[str, ...] | list[str],
    group_by: str | None = None,
    title: str | None = None,
) -> str:
    """Plot columns y against column x and write a standalone SVG.

    group_by names a category column (e.g. 'kind'); each category gets
    its own series, drawn as a line when it traces a curve-like column
    count (<= 500 points) and as dots otherwise. Raises MalformedCsv on
    an empty table or unknown columns, before any file is written.
    """
    header, rows = _load(csv_path)
    cols = {name: i for i, name in enumerate(header)}
    missing = [c for c in (x, *y) if c not in cols]
    if group_by is not None and group_by not in cols:
        missing.append(group_by)
    if missing:
        raise MalformedCsv(f"{csv_path}: missing columns {missing}")

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    groups: dict[str, list[list[str]]] = {}
    if group_by is None:
        groups[""] = rows
    else:
        for row in rows:
            groups.setdefault(row[cols[group_by]], []).append(row)

    for gname in sorted(groups):
        grows = groups[gname]
        for ycol in y:
            xs, ys = [], []
            for row in grows:
                xv, yv = row[cols[x]], row[cols[ycol]]
                if xv == "" or yv == "":
                    continue
                xs.append(float(xv))
                ys.append(float(yv))
            if not xs:
                continue
            label = f"{gname} {ycol}".strip()
            if len(xs) <= 500 and len(xs) >= 2:
                order = sorted(range(len(xs)), key=xs.__getitem__)
                ax.plot([xs[i] for i in order], [ys[i] for i in order],
                        marker=".", markersize=3, linewidth=1, label=label)
            else:
                ax.scatter(xs, ys, s=2, alpha=0.5, label=label)

    ax.set_xlabel(x)
    ax.set_ylabel(", ".join(y))
    if title:
        ax.set_title(title)
    ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    fig.savefig(svg_path, format="svg")
    plt.close(fig)
    return svg_path
