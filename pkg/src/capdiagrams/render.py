"""Text and figure rendering of arrow diagrams, cap diagrams and matrices.

Text output defaults to ASCII (O/V/A/X); unicode arrows are opt-in.  Figures
are drawn with matplotlib (imported lazily) and written to whatever format
the file extension selects, e.g. ``.svg`` or ``.png``.
"""

from __future__ import annotations

from typing import Union

from .caps import CapDiagram, cap_orientations
from .diagrams import DiagramString
from .multiplicities import DecompositionMatrix
from .weights import format_weight

ASCII_GLYPHS = {"O": "o", "V": "V", "A": "A", "X": "X"}
UNICODE_GLYPHS = {"O": "o", "V": "∨", "A": "∧", "X": "×"}


def _gap_text(ds: DiagramString) -> str:
    below = f"{ds.label_at(ds.p - 1)}|{ds.label_at(0)}"
    if ds.split is None:
        above = below.replace("|", "!")
    else:
        above = f"{ds.label_at(ds.split - 1)}!{ds.label_at(ds.split)}"
    return f"below_wall={below} above_wall={above}"


def header_line(ds: DiagramString) -> str:
    return (f"p={ds.p} n={ds.n} s1={ds.s1} s2={ds.s2} shift={ds.shift} "
            + _gap_text(ds))


def diagram_text(ds: DiagramString, unicode_arrows: bool = False) -> str:
    """Header, compact string, and a two-row picture with wall markers."""
    glyphs = UNICODE_GLYPHS if unicode_arrows else ASCII_GLYPHS
    width = max(len(str(ds.label_at(k))) for k in range(ds.p))
    above, labels, below = [], [], []
    for pos in range(ds.p):
        sym = ds.symbols[pos]
        above.append((glyphs["V"] if sym in ("V", "X") else ".").rjust(width))
        labels.append(str(ds.label_at(pos)).rjust(width))
        below.append((glyphs["A"] if sym in ("A", "X") else ".").rjust(width))
    sep_above = [" "] * (ds.p + 1)
    sep_below = [" "] * (ds.p + 1)
    sep_below[ds.p] = "|"
    if ds.split is None:
        sep_above[ds.p] = "!"
    else:
        sep_above[ds.split] = "!"

    def join(cells, seps):
        out = ""
        for k, cell in enumerate(cells):
            out += cell + seps[k + 1]
        return out.rstrip() if seps[len(cells)] == " " else out

    compact = "".join(glyphs[s] if unicode_arrows else s for s in ds.symbols)
    return "\n".join([
        header_line(ds),
        compact,
        join(above, sep_above),
        join(labels, [" "] * (ds.p + 1)),
        join(below, sep_below),
    ])


def caps_text(cd: CapDiagram, unicode_arrows: bool = False) -> str:
    """Diagram rendering plus a bracket row and one legend line per cap."""
    ds = cd.base
    arcs = ["."] * ds.p
    for c in cd.caps:
        arcs[c.left], arcs[c.right] = "(", ")"
    width = max(len(str(ds.label_at(k))) for k in range(ds.p))
    arc_row = "".join(a.rjust(width) + " " for a in arcs).rstrip()
    lines = [diagram_text(ds, unicode_arrows), "caps: " + arc_row]
    for idx, (c, verdict) in enumerate(zip(cd.caps, cap_orientations(cd))):
        lines.append(
            f"  cap {idx}: labels ({ds.label_at(c.left)},{ds.label_at(c.right)}) "
            f"side={'left' if c.side == 0 else 'right'} {verdict}")
    return "\n".join(lines)


def save_diagram_figure(obj: Union[DiagramString, CapDiagram], path: str) -> None:
    """Draw the node line, arrows, walls and (if present) cap arcs to a file."""
    from matplotlib.figure import Figure
    from matplotlib.patches import Arc

    cd = obj if isinstance(obj, CapDiagram) else None
    ds = cd.base if cd else obj
    p = ds.p
    fig = Figure(figsize=(max(4.0, 0.55 * p), 2.8))
    ax = fig.add_subplot()
    ax.plot(range(p), [0] * p, color="black", lw=1, zorder=1)
    ax.scatter(range(p), [0] * p, s=14, color="black", zorder=2)
    for pos in range(p):
        sym = ds.symbols[pos]
        if sym in ("V", "X"):
            ax.text(pos, 0.13, "∨", ha="center", va="bottom", fontsize=12)
        if sym in ("A", "X"):
            ax.text(pos, -0.13, "∧", ha="center", va="top", fontsize=12)
        ax.text(pos, -0.62, str(ds.label_at(pos)), ha="center", va="top",
                fontsize=9, color="dimgray")
    # walls: below wall at the boundary, above wall at the split gap
    ax.plot([p - 0.5, p - 0.5], [-0.45, -0.05], color="black", lw=2)
    if ds.split is None:
        ax.plot([p - 0.5, p - 0.5], [0.05, 0.45], color="black", lw=2)
    else:
        x = ds.split - 0.5
        ax.plot([x, x], [0.05, 0.45], color="black", lw=2)
    if cd:
        for c in cd.caps:
            span = c.right - c.left
            ax.add_patch(Arc(((c.left + c.right) / 2, 0.30), span, 0.35 + 0.22 * span,
                             theta1=0, theta2=180, lw=1.2))
    ax.set_xlim(-1, p)
    ax.set_ylim(-1.2, 1.1 + 0.12 * p)
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight")


def matrix_text(dm: DecompositionMatrix) -> str:
    """Aligned 0/1 matrix with bipartition row and column labels."""
    names = [format_weight(w) for w in dm.weights]
    width = max(len(s) for s in names)
    lines = [" " * (width + 1) + " ".join(s.rjust(width) for s in names)]
    for name, row in zip(names, dm.entries):
        lines.append(name.rjust(width) + "  "
                     + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines)


def matrix_rows(dm: DecompositionMatrix):
    """Machine-readable {lambda, mu, value} records, row-major."""
    for w, row in zip(dm.weights, dm.entries):
        for mu, v in zip(dm.weights, row):
            yield {"lambda": format_weight(w), "mu": format_weight(mu), "value": v}


def save_matrix_figure(dm: DecompositionMatrix, path: str) -> None:
    """Render the 0/1 matrix as a shaded grid with weight labels."""
    from matplotlib.figure import Figure

    m = len(dm.weights)
    names = [format_weight(w) for w in dm.weights]
    fig = Figure(figsize=(1.2 + 0.45 * m, 1.2 + 0.45 * m))
    ax = fig.add_subplot()
    ax.imshow(dm.entries, cmap="Greys", vmin=0, vmax=1.6)
    for i in range(m):
        for j in range(m):
            if dm.entries[i][j]:
                ax.text(j, i, "1", ha="center", va="center", color="white",
                        fontsize=8)
    ax.set_xticks(range(m), names, rotation=90, fontsize=7)
    ax.set_yticks(range(m), names, fontsize=7)
    ax.set_xlabel("L(mu)")
    ax.set_ylabel("Delta(lambda)")
    fig.savefig(path, bbox_inches="tight")
