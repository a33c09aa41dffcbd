"""Compare the block order with a greedily found order on the colon ideals (I^{s+1} : x_{t+5}).

Usage: python3 scripts/linear_quotients_orders.py [t_max] [s_max]
"""
import sys

from edgeres.families import b_colon_ideal, step_ideal
from edgeres.monomial import banerjee_order, check_linear_quotients, greedy_linear_quotients_order


def main(t_max: int = 2, s_max: int = 2) -> None:
    print("ideal\tt\ts\tgens\tblock_order\twitness\tgreedy_order")
    for t in range(1, t_max + 1):
        for s in range(s_max + 1):
            for name, ideal in (("step", step_ideal(t, s)), ("colon", b_colon_ideal(t, s))):
                order = banerjee_order(ideal, t + 3, s)
                report = check_linear_quotients(order)
                witness = report.to_json(order.variables)["witness"]
                shown = "-" if witness is None else f"q={witness['q']},l={witness['l']},{witness['quotient']}"
                greedy = greedy_linear_quotients_order(ideal)
                found = "found" if greedy is not None and check_linear_quotients(greedy).ok else "none"
                print(f"{name}\t{t}\t{s}\t{len(ideal.gens)}\t{'ok' if report.ok else 'fail'}\t{shown}\t{found}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
