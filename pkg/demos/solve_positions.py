"""Walk through solving positions: values, scores, and optimal lines.

Run:  python3 demos/solve_positions.py
"""

from strings_and_coins import LoopyMultigraph, best_move, make, solve


def show(label, g):
    gv = solve(g)
    print(
        f"{label:28s} {gv.winner:3s} ({gv.p1_score}-{gv.p2_score})"
        f"   differential {gv.differential:+d}"
        f"   [{gv.stats.nodes} nodes, {gv.stats.memo_hits} memo hits]"
    )
    return gv


def main():
    print("== Values of small positions ==")
    show("single string", LoopyMultigraph.from_edges([(0, 1)]))
    show("triangle C3", make("cycle", 3))
    show("square C4", make("cycle", 4))
    show("one coin, one loop", LoopyMultigraph.from_edges([(0, 0)]))
    show("loopy star L2", make("loopy_star", 2))
    show("friendship F2", make("friendship", 2))
    show("wheel, 6 spokes", make("wheel", 6))
    show("petersen", make("petersen"))

    print()
    print("== An optimal game, played out on the loopy 6-cycle ==")
    g = make("loopy_cycle", 6, 1)
    to_move, scores = 0, [0, 0]
    while g.edge_count:
        ref, gv = best_move(g)
        kind = "loop at " + str(ref.u) if ref.is_loop else f"string {ref.u}-{ref.v}"
        out = g.remove_edge(ref)
        scores[to_move] += out.captured
        note = f"captures {out.captured}, moves again" if out.mover_moves_again else (
            f"captures {out.captured}" if out.captured else "no capture"
        )
        print(f"  P{to_move + 1} takes {kind:14s} -> {note}")
        g = out.successor
        if not out.mover_moves_again and g.edge_count:
            to_move = 1 - to_move
        elif out.captured and not g.edge_count:
            pass  # last coins fall to the mover
    print(f"  final score P1 {scores[0]} - P2 {scores[1]}")


if __name__ == "__main__":
    main()
