"""Coxeter diagrams of root sets, DOT rendering and the Gauss-Bonnet area."""
from dataclasses import dataclass
from fractions import Fraction

from vinberg.forms import inner

NO_EDGE = 2
THICK = "inf"

# cos^2(pi/m) for the only m > 2 with rational cos^2
_WEIGHTS = {Fraction(1, 4): 3, Fraction(1, 2): 4, Fraction(3, 4): 6}


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Dashed:
    """Divergent pair; ``value`` is the exact ``cosh^2`` of their distance."""

    value: Fraction

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


def classify_pair(form, ei, ej):
    """Edge label between two roots.

    Returns ``2`` (no edge), an int weight ``3``, ``4`` or ``6``, ``"inf"`` for
    a thick edge, or :class:`Dashed`.
    """
    ei, ej = getattr(ei, "e", ei), getattr(ej, "e", ej)
    si, sj = inner(form, ei, ei), inner(form, ej, ej)
    if si <= 0 or sj <= 0:
        raise DiagramError("roots must have positive norm")
    p = inner(form, ei, ej)
    if p > 0:
        raise DiagramError(f"obtuse pair: ({ei}, {ej}) = {p} > 0")
    c = Fraction(p * p, si * sj)
    if c == 0:
        return NO_EDGE
    if c == 1:
        return THICK
    if c > 1:
        return Dashed(c)
    try:
        return _WEIGHTS[c]
    except KeyError:
        raise DiagramError(f"non-Coxeter dihedral: cos^2 = {c}") from None


@dataclass(frozen=True)
class CoxeterDiagram:
    F: int
    edges: tuple  # (i, j, label) with i < j; orthogonal pairs omitted

    def label(self, i, j):
        i, j = min(i, j), max(i, j)
        for a, b, lab in self.edges:
            if (a, b) == (i, j):
                return lab
        return NO_EDGE

    def to_json(self):
        def enc(lab):
            if isinstance(lab, Dashed):
                return {"dashed": str(lab)}
            return str(lab)
        return {"F": self.F, "edges": [[i, j, enc(lab)] for i, j, lab in self.edges]}

    @classmethod
    def from_json(cls, obj):
        edges = []
        for i, j, lab in obj["edges"]:
            if isinstance(lab, dict):
                lab = Dashed(Fraction(lab["dashed"]))
            elif lab != THICK:
                lab = int(lab)
            edges.append((int(i), int(j), lab))
        return cls(int(obj["F"]), tuple(edges))


def coxeter_diagram(form, roots):
    roots = [getattr(r, "e", r) for r in roots]
    edges = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            lab = classify_pair(form, roots[i], roots[j])
            if lab != NO_EDGE:
                edges.append((i, j, lab))
    return CoxeterDiagram(len(roots), tuple(edges))


def gram_matrix(form, roots):
    roots = [getattr(r, "e", r) for r in roots]
    return [[inner(form, a, b) for b in roots] for a in roots]


def emit_dot(diagram):
    lines = ["graph coxeter {", "  node [shape=circle];"]
    lines += [f"  v{i};" for i in range(diagram.F)]
    for i, j, lab in diagram.edges:
        if lab == THICK:
            attrs = 'label="inf", penwidth=3'
        elif isinstance(lab, Dashed):
            attrs = f'label="{lab}", style=dashed'
        else:
            attrs = f'label="{lab}"'
        lines.append(f"  v{i} -- v{j} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def area_gauss_bonnet(diagram, cycle):
    """Area of a hyperbolic polygon as a rational multiple of pi.

    ``cycle`` lists the facets in cyclic order; consecutive facets meet at a
    vertex whose interior angle is ``pi/m`` (0 for a thick edge).
    """
    F = len(cycle)
    if F < 3:
        raise DiagramError("a polygon needs at least three sides")
    angles = Fraction(0)
    for k in range(F):
        lab = diagram.label(cycle[k], cycle[(k + 1) % F])
        if isinstance(lab, Dashed):
            raise DiagramError("not finite volume: adjacent sides diverge")
        if lab != THICK:
            angles += Fraction(1, lab)
    return (F - 2) - angles
