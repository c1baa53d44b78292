"""Component-preserving bijection between the two path families.

The forward map ``phi`` sends a grand Schroeder path with all flatsteps on the
line y=2 to a Schroeder path with at most one peak per component.  It acts on
each indecomposable component independently:

* a component lying entirely below ground (necessarily flat-free) is mirrored
  above ground and every peak is flattened, giving a component with no peak;

* a component lying entirely above ground runs through a cut-and-paste
  pipeline -- strip the outer upstep/downstep, expand each flatstep into a
  marked down-up valley, mirror the leading component and every component
  that starts at a marked vertex, swap the two blocks delimited by the
  leftmost lowest vertex and the last rising return to ground, flatten all
  peaks except the one created at the block boundary, and re-attach the outer
  steps -- giving a component with exactly one peak.

Every stage has an explicit inverse, exposed alongside it, and the whole
pipeline can be traced stage by stage.  The inverse stages check that their
input lies in the forward stage's image and raise ``InverseDomainError``
otherwise; for genuine class members those checks never fire, which is
exactly the reversibility claim the test suite verifies exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .paths import (
    DOWN,
    FLAT,
    UP,
    MarkedPath,
    Path,
    PathbijError,
    components,
    concat,
    in_class_a,
    in_class_b,
    is_indecomposable,
    peak_apexes,
    reflect,
)


class UnknownApex(PathbijError):
    """``keep`` mentioned a vertex that is not a peak apex."""


class FlatNotAtHeightOne(PathbijError):
    """Flatstep expansion needs every flatstep at height 1."""


class MarkNotContractible(PathbijError):
    """A marked vertex is not flanked by a downstep-upstep pair."""


class PreconditionViolated(PathbijError):
    """The input lies outside the operation's stated domain."""


class InverseDomainError(PathbijError):
    """An inverse stage was fed a value outside the forward stage's image."""


class NotInClass(PathbijError):
    """The path does not belong to the family the map is defined on."""


def flatten_peaks(p: Path, keep: Iterable[int] = ()) -> Path:
    """Replace every peak whose apex is not in ``keep`` by a flatstep at the base height."""
    apexes = set(peak_apexes(p))
    kept = set(keep)
    stray = kept - apexes
    if stray:
        raise UnknownApex(f"vertices {sorted(stray)} are not peak apexes")
    drop = apexes - kept
    s = p.steps
    out: list[str] = []
    i = 0
    while i < len(s):
        if i + 1 in drop:  # steps i, i+1 are the U,D of a flattened peak
            out.append(FLAT)
            i += 2
        else:
            out.append(s[i])
            i += 1
    return Path("".join(out))


def unflatten_flats(p: Path) -> Path:
    """Replace every flatstep by an up-down peak at the same base height."""
    return Path(p.steps.replace(FLAT, UP + DOWN))


def map_indecomposable_below(p: Path) -> Path:
    """Map an all-below component: mirror above ground, then flatten every peak.

    The image is an indecomposable Schroeder path of equal size with no peak.
    """
    hs = p.heights
    if not p.steps or hs[-1] != 0 or FLAT in p.steps or any(h >= 0 for h in hs[1:-1]):
        raise PreconditionViolated(
            "expected a flat-free indecomposable component lying below ground"
        )
    return flatten_peaks(reflect(p))


def expand_flats(p: Path) -> MarkedPath:
    """Replace each height-1 flatstep by a down-up valley, marking the new ground vertex.

    The result is a Dyck path of equal size; the marks remember which ground
    vertices were created so the expansion can be undone.
    """
    hs = p.heights
    if hs[-1] != 0 or min(hs) < 0:
        raise PreconditionViolated("expected a Schroeder path")
    out: list[str] = []
    marks = set()
    for i, c in enumerate(p.steps):
        if c == FLAT:
            if hs[i] != 1:
                raise FlatNotAtHeightOne(f"flatstep before vertex {i} sits at height {hs[i]}")
            out.append(DOWN)
            marks.add(len(out))  # the vertex between the new down-up pair
            out.append(UP)
        else:
            out.append(c)
    return MarkedPath(Path("".join(out)), frozenset(marks))


def contract_marks(mp: MarkedPath) -> Path:
    """Inverse of expand_flats: each marked down-up valley becomes one flatstep."""
    s = mp.path.steps
    for m in mp.marks:
        if s[m - 1] != DOWN or s[m] != UP:
            raise MarkNotContractible(f"vertex {m} is not between a downstep and an upstep")
    out: list[str] = []
    i = 0
    while i < len(s):
        if i + 1 in mp.marks:
            out.append(FLAT)
            i += 2
        else:
            out.append(s[i])
            i += 1
    return Path("".join(out))


def flip_marked(mp: MarkedPath) -> Path:
    """Mirror the first component and every component that starts at a marked vertex.

    On a nonempty Dyck path every mark is automatically a component boundary;
    the result is a grand Dyck path whose first component lies below ground.
    """
    p = mp.path
    if not p.steps or FLAT in p.steps or p.min_height < 0 or p.end_height != 0:
        raise PreconditionViolated("expected a nonempty Dyck path")
    flipped = [
        reflect(c.path) if i == 0 or c.start in mp.marks else c.path
        for i, c in enumerate(components(p).parts)
    ]
    return concat(flipped)


def recover_marks(g: Path) -> MarkedPath:
    """Inverse of flip_marked: mirror the below components, marking where the later ones start."""
    if not g.steps or FLAT in g.steps or g.end_height != 0:
        raise InverseDomainError("expected a nonempty grand Dyck path")
    view = components(g)
    if view.parts[0].path.steps[0] != DOWN:
        raise InverseDomainError("first component must lie below ground")
    out: list[Path] = []
    marks = set()
    for i, c in enumerate(view.parts):
        if c.path.steps[0] == DOWN:
            out.append(reflect(c.path))
            if i > 0:
                marks.add(c.start)
        else:
            out.append(c.path)
    return MarkedPath(concat(out), frozenset(marks))


class Landmarks(NamedTuple):
    v1: int
    v2: int


def landmarks(g: Path) -> Landmarks:
    """Locate the leftmost lowest vertex and the end of the last upstep returning to ground.

    Defined on nonempty grand Dyck paths whose first component lies below
    ground; then 0 < v1 < v2 always holds.
    """
    hs = g.heights
    if not g.steps or FLAT in g.steps or hs[-1] != 0 or g.steps[0] != DOWN:
        raise PreconditionViolated(
            "expected a grand Dyck path whose first component lies below ground"
        )
    v1 = hs.index(min(hs))
    v2 = max(v for v in range(1, len(hs)) if hs[v] == 0 and g.steps[v - 1] == UP)
    return Landmarks(v1, v2)


class Interchanged(NamedTuple):
    path: Path
    w: int


def interchange(g: Path, v1: int, v2: int) -> Interchanged:
    """Swap the blocks before v1 and from v1 to v2; w is where v2 lands.

    The result is a Dyck path with a peak apex at w = v2 - v1 (the moved
    block starts at the old minimum, so the whole path stays nonnegative).
    """
    if landmarks(g) != (v1, v2):
        raise PreconditionViolated(f"({v1}, {v2}) are not the landmark vertices")
    s = g.steps
    return Interchanged(Path(s[v1:v2] + s[:v1] + s[v2:]), v2 - v1)


def reverse_interchange(d: Path, w: int) -> Path:
    """Inverse of interchange: split after w at the next ground return and rotate back."""
    hs = d.heights
    if FLAT in d.steps or hs[-1] != 0 or min(hs) < 0:
        raise InverseDomainError("expected a Dyck path")
    if not 1 <= w < len(hs) - 1 or d.steps[w - 1] != UP or d.steps[w] != DOWN:
        raise InverseDomainError(f"vertex {w} is not a peak apex")
    z = next(v for v in range(w + 1, len(hs)) if hs[v] == 0)
    s = d.steps
    return Path(s[w:z] + s[:w] + s[z:])


Direction = Literal["forward", "inverse"]


@dataclass(frozen=True)
class Stage:
    """One labelled value in a pipeline trace, with any landmarks it carries."""

    label: str
    path: Path
    marks: frozenset[int] = frozenset()
    v1: int | None = None
    v2: int | None = None
    w: int | None = None

    def line(self) -> str:
        out = f"{self.label}: {self.path.steps}".rstrip()
        if self.marks:
            out += " marks=" + ",".join(str(m) for m in sorted(self.marks))
        if self.v1 is not None:
            out += f" v1={self.v1} v2={self.v2}"
        if self.w is not None:
            out += f" w={self.w}"
        return out


@dataclass(frozen=True)
class StageTrace:
    direction: str
    stages: tuple[Stage, ...]

    def lines(self) -> list[str]:
        return [s.line() for s in self.stages]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _above_forward_stages(p: Path) -> list[Stage]:
    """Stages of the above-ground pipeline; p is assumed a valid above component."""
    stages = [Stage("input", p)]
    inner = Path(p.steps[1:-1])
    stages.append(Stage("strip-ends", inner))
    if not inner.steps:
        # Size-1 component: the inner pipeline acts on the empty path.
        stages += [
            Stage("expand-flats", inner),
            Stage("flip-components", inner),
            Stage("interchange", inner),
            Stage("flatten-peaks", inner),
            Stage("output", p),
        ]
        return stages
    marked = expand_flats(inner)
    stages.append(Stage("expand-flats", marked.path, marks=marked.marks))
    flipped = flip_marked(marked)
    v1, v2 = landmarks(flipped)
    stages.append(Stage("flip-components", flipped, v1=v1, v2=v2))
    swapped, w = interchange(flipped, v1, v2)
    stages.append(Stage("interchange", swapped, w=w))
    flattened = flatten_peaks(swapped, keep={w})
    stages.append(Stage("flatten-peaks", flattened))
    stages.append(Stage("output", Path(UP + flattened.steps + DOWN)))
    return stages


def map_indecomposable_above(p: Path) -> Path:
    """Map an all-above component through the pipeline; the image has exactly one peak."""
    hs = p.heights
    if not p.steps or hs[-1] != 0 or any(h <= 0 for h in hs[1:-1]) or not in_class_a(p):
        raise PreconditionViolated(
            "expected an indecomposable flat-line component lying above ground"
        )
    return _above_forward_stages(p)[-1].path


def _above_inverse_stages(q: Path) -> list[Stage]:
    """Inverse pipeline stages; q is assumed a valid one-peak component."""
    stages = [Stage("input", q)]
    inner = Path(q.steps[1:-1])
    stages.append(Stage("strip-ends", inner))
    if not inner.steps:
        stages += [
            Stage("unflatten-flats", inner),
            Stage("reverse-interchange", inner),
            Stage("recover-marks", inner),
            Stage("contract-marks", inner),
            Stage("output", q),
        ]
        return stages
    # The unique peak survives stripping (a peak touching the outer steps
    # would force an interior ground vertex).  Rebuild the step word with
    # every flatstep expanded, tracking where the kept apex lands.
    apex = peak_apexes(q)[0]
    a = apex - 1  # apex in inner indexing
    out: list[str] = []
    w = -1
    for j, c in enumerate(inner.steps):
        if j == a - 1:
            w = len(out) + 1
        if c == FLAT:
            out.append(UP)
            out.append(DOWN)
        else:
            out.append(c)
    d = Path("".join(out))
    stages.append(Stage("unflatten-flats", d, w=w))
    g = reverse_interchange(d, w)
    stages.append(Stage("reverse-interchange", g))
    marked = recover_marks(g)
    stages.append(Stage("recover-marks", marked.path, marks=marked.marks))
    contracted = contract_marks(marked)
    stages.append(Stage("contract-marks", contracted))
    stages.append(Stage("output", Path(UP + contracted.steps + DOWN)))
    return stages


def unmap_indecomposable(q: Path) -> Path:
    """Inverse map on one component: no peak goes below ground, one peak goes above."""
    if not is_indecomposable(q) or not in_class_b(q):
        raise PreconditionViolated("expected an indecomposable component with at most one peak")
    if not peak_apexes(q):
        return reflect(unflatten_flats(q))
    if q.steps == UP + DOWN:
        return q
    return _above_inverse_stages(q)[-1].path


def _map_component(c: Path) -> Path:
    if c.steps[0] == DOWN:
        return map_indecomposable_below(c)
    return map_indecomposable_above(c)


def phi(p: Path) -> Path:
    """Forward bijection, applied to each component independently.

    Preserves size and the component size sequence; below-ground components
    map to peak-free components and above-ground ones to one-peak components.
    """
    if not in_class_a(p):
        raise NotInClass("input is not a grand Schroeder path with all flatsteps on y=2")
    return concat(_map_component(c.path) for c in components(p).parts)


def phi_inverse(q: Path) -> Path:
    """Inverse bijection; phi_inverse(phi(p)) == p and phi(phi_inverse(q)) == q."""
    if not in_class_b(q):
        raise NotInClass("input is not a Schroeder path with at most one peak per component")
    return concat(unmap_indecomposable(c.path) for c in components(q).parts)


def trace_stages(p: Path, direction: Direction = "forward") -> StageTrace:
    """Labelled intermediate values of the pipeline on one indecomposable component.

    Below-ground (forward) and peak-free (inverse) components map in a single
    composite move, so their traces have just the input and output stages.
    """
    if direction == "forward":
        if not in_class_a(p) or not is_indecomposable(p):
            raise NotInClass("forward tracing needs a single indecomposable flat-line component")
        if p.steps[0] == DOWN:
            stages = [Stage("input", p), Stage("output", map_indecomposable_below(p))]
        else:
            stages = _above_forward_stages(p)
    elif direction == "inverse":
        if not in_class_b(p) or not is_indecomposable(p):
            raise NotInClass("inverse tracing needs a single indecomposable peak-limited component")
        if not peak_apexes(p):
            stages = [Stage("input", p), Stage("output", reflect(unflatten_flats(p)))]
        else:
            stages = _above_inverse_stages(p)
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
    return StageTrace(direction, tuple(stages))
