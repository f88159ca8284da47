"""2-satisfiability via the implication graph and strongly connected components.

Literals are integers: variable ``v`` is ``2*v`` (true) and ``2*v + 1``
(false), so negation is ``lit ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def pos(v: int) -> int:
    return 2 * v


def neg(v: int) -> int:
    return 2 * v + 1


@dataclass
class TwoSatInstance:
    var_count: int
    clauses: list[tuple[int, int]] = field(default_factory=list)

    def add(self, a: int, b: int) -> None:
        if a >> 1 >= self.var_count or b >> 1 >= self.var_count or a < 0 or b < 0:
            raise ValueError(f"literal out of range in clause ({a}, {b})")
        self.clauses.append((a, b))

    def satisfied_by(self, values: list[bool]) -> bool:
        def holds(lit: int) -> bool:
            return values[lit >> 1] != bool(lit & 1)

        return all(holds(a) or holds(b) for a, b in self.clauses)

    def to_dimacs(self) -> str:
        """DIMACS-CNF text: ``p cnf V C`` then one ``±(v+1) ... 0`` line per clause."""

        def lit(x: int) -> str:
            v = (x >> 1) + 1
            return f"-{v}" if x & 1 else f"{v}"

        lines = [f"p cnf {self.var_count} {len(self.clauses)}"]
        lines.extend(f"{lit(a)} {lit(b)} 0" for a, b in self.clauses)
        return "\n".join(lines) + "\n"


def _tarjan(n_nodes: int, succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan; component ids come out in reverse topological order."""
    index = [-1] * n_nodes
    low = [0] * n_nodes
    comp = [-1] * n_nodes
    on_stack = [False] * n_nodes
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            node, i = work[-1]
            if i < len(succ[node]):
                work[-1] = (node, i + 1)
                nxt = succ[node][i]
                if index[nxt] == -1:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack[nxt] = True
                    work.append((nxt, 0))
                elif on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == node:
                        break
                n_comp += 1
    return comp


def solve(inst: TwoSatInstance) -> list[bool] | None:
    """Satisfying assignment for ``inst``, or ``None`` if unsatisfiable.

    Each clause ``(a or b)`` contributes implications ``not a -> b`` and
    ``not b -> a``. A variable is set true when its positive literal's
    component comes after the negative one's in topological order.
    """
    n_lit = 2 * inst.var_count
    succ: list[list[int]] = [[] for _ in range(n_lit)]
    for a, b in inst.clauses:
        succ[a ^ 1].append(b)
        succ[b ^ 1].append(a)
    comp = _tarjan(n_lit, succ)
    values = []
    for v in range(inst.var_count):
        cp, cn = comp[2 * v], comp[2 * v + 1]
        if cp == cn:
            return None
        values.append(cp < cn)
    return values
