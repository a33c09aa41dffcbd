"""Print index, pd, reg and the nonlinear Betti numbers of every family edge ideal.

Usage: python3 scripts/family_report.py [t_max] [field]
"""
import sys

from edgeres.betti import hochster_betti, resolution_stats
from edgeres.families import all_specs, build_family
from edgeres.field import parse_field
from edgeres.graph import complement


def main(t_max: int = 3, field_text: str = "q") -> None:
    field = parse_field(field_text)
    print("family\tn\tindex\tpd\treg\tnonlinear")
    for spec in all_specs(t_max):
        g = complement(build_family(spec))
        table = hochster_betti(g, field)
        s = resolution_stats(table)
        nonlinear = " ".join(f"b{i},{j}={b}" for (i, j), b in sorted(table.nonlinear().items()))
        print(f"{spec}\t{g.n}\t{s.index}\t{s.pd}\t{s.reg}\t{nonlinear}")


if __name__ == "__main__":
    args = sys.argv[1:]
    main(int(args[0]) if args else 3, args[1] if len(args) > 1 else "q")
