"""Write DOT files (beta beside each vertex, boundary in red) for the small
cores, the lattice families and a few named graphs; render with
``neato -n -Tpng`` when the file carries positions, ``dot`` otherwise."""

import argparse
import os

from graphboundary.cli import to_dot
from graphboundary.families import (
    CORE_NAMES,
    barbell,
    d_graph,
    fig2_core,
    l_graph,
    n_graph,
    star,
    t_graph,
    tailed_clique_claw,
    x_graph,
)


def figures(a: int, c: int):
    for name in CORE_NAMES:
        yield f"core_{name}", fig2_core(name, 3 if name.startswith("X1c") else None)
    for label, gen in (("N", n_graph), ("X", x_graph), ("T", t_graph), ("D", d_graph), ("L", l_graph)):
        yield f"{label}_{a}x{c}", gen(a, c)
    yield "star4", star(4)
    yield "barbell4", barbell(4)
    yield "tailed_clique_claw", tailed_clique_claw()


def main() -> None:
    p = argparse.ArgumentParser(description="Emit DOT files for reference graphs.")
    p.add_argument("--out", default="figures")
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--c", type=int, default=2)
    args = p.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, g in figures(args.a, args.c):
        path = os.path.join(args.out, f"{name}.dot")
        with open(path, "w") as fh:
            fh.write(to_dot(g) + "\n")
        print(path)


if __name__ == "__main__":
    main()
