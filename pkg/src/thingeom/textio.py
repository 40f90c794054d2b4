"""Line-oriented text formats for groups, G-sets and coverings.

    # group (.grp)
    points 4
    gen (0 1)(2 3)

    # G-set (.gset): a group reference or inline group, then
    group c2.grp
    size 4
    act 1 0 3 2          # one line per declared generator

    # covering (.cov): a G-set for the total space plus
    pi 0 0 1 1

    # oriented covering (.ocov): a covering plus
    orient 1             # label of the class of section 0

``#`` starts a comment.  Group references are resolved relative to the
file that contains them.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .covering import Covering, OrientedCovering
from .group_core import FiniteGroup, format_cycles, group_from_generators, parse_cycles
from .gset import GSet


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, str, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        out.append((no, key, rest.strip()))
    return out


def _ints(rest: str, no: int) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in rest.split())
    except ValueError:
        raise ParseError(f"line {no}: expected integers, got {rest!r}") from None


def _single_int(rest: str, no: int) -> int:
    vals = _ints(rest, no)
    if len(vals) != 1:
        raise ParseError(f"line {no}: expected one integer")
    return vals[0]


def _group_from_lines(lines, source: str) -> Optional[FiniteGroup]:
    points = None
    gens = []
    for no, key, rest in lines:
        if key == "points":
            if points is not None:
                raise ParseError(f"line {no}: duplicate 'points'")
            points = _single_int(rest, no)
            if points <= 0:
                raise ParseError(f"line {no}: 'points' must be positive")
        elif key == "gen":
            if points is None:
                raise ParseError(f"line {no}: 'gen' before 'points'")
            try:
                gens.append(parse_cycles(rest, points))
            except ValueError as exc:
                raise ParseError(f"line {no}: {exc}") from None
    if points is None:
        return None
    return group_from_generators(points, gens)


def parse_group(text: str) -> FiniteGroup:
    lines = _lines(text)
    for no, key, _ in lines:
        if key not in ("points", "gen"):
            raise ParseError(f"line {no}: unexpected keyword {key!r} in a group file")
    G = _group_from_lines(lines, "group")
    if G is None:
        raise ParseError("missing 'points' line")
    return G


def format_group(G: FiniteGroup) -> str:
    out = [f"points {G.degree}"]
    out += [f"gen {format_cycles(p)}" for p in G.gen_perms]
    return "\n".join(out) + "\n"


_GSET_KEYS = {"group", "points", "gen", "size", "act"}


def _gset_from_lines(lines, base_dir: Optional[Path]) -> GSet:
    refs = [(no, rest) for no, key, rest in lines if key == "group"]
    inline = _group_from_lines(lines, "gset")
    if refs and inline is not None:
        raise ParseError("give either a 'group' reference or an inline group, not both")
    if len(refs) > 1:
        raise ParseError(f"line {refs[1][0]}: duplicate 'group'")
    if refs:
        no, rest = refs[0]
        path = Path(rest)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        try:
            G = parse_group(path.read_text())
        except OSError as exc:
            raise ParseError(f"line {no}: cannot read group file {rest!r}: {exc}") from None
    elif inline is not None:
        G = inline
    else:
        raise ParseError("missing group: add 'group <file>' or inline 'points'/'gen' lines")
    sizes = [(no, rest) for no, key, rest in lines if key == "size"]
    if len(sizes) != 1:
        raise ParseError("expected exactly one 'size' line")
    size = _single_int(sizes[0][1], sizes[0][0])
    if size < 0:
        raise ParseError("size must be non-negative")
    acts = [(no, _ints(rest, no)) for no, key, rest in lines if key == "act"]
    if len(acts) != len(G.gen_perms):
        raise ParseError(f"expected {len(G.gen_perms)} 'act' lines, got {len(acts)}")
    for no, p in acts:
        if len(p) != size:
            raise ParseError(f"line {no}: 'act' needs {size} entries")
    return GSet.from_images(G, size, [p for _, p in acts])


def parse_gset(text: str, base_dir: Optional[Path] = None) -> GSet:
    lines = _lines(text)
    for no, key, _ in lines:
        if key not in _GSET_KEYS:
            raise ParseError(f"line {no}: unexpected keyword {key!r} in a G-set file")
    return _gset_from_lines(lines, base_dir)


def format_gset(X: GSet) -> str:
    out = [format_group(X.group).rstrip("\n"), f"size {X.size}"]
    out += ["act " + " ".join(map(str, p)) if p else "act" for p in X.gen_images]
    return "\n".join(out) + "\n"


def _covering_from_lines(lines, base_dir) -> Covering:
    total = _gset_from_lines([ln for ln in lines if ln[1] in _GSET_KEYS], base_dir)
    pis = [(no, rest) for no, key, rest in lines if key == "pi"]
    if len(pis) != 1:
        raise ParseError("expected exactly one 'pi' line")
    pi = _ints(pis[0][1], pis[0][0])
    if len(pi) != total.size:
        raise ParseError(f"line {pis[0][0]}: 'pi' needs {total.size} entries")
    return Covering.from_total(total, pi)


def parse_covering(text: str, base_dir: Optional[Path] = None) -> Covering:
    lines = _lines(text)
    for no, key, _ in lines:
        if key not in _GSET_KEYS | {"pi"}:
            raise ParseError(f"line {no}: unexpected keyword {key!r} in a covering file")
    return _covering_from_lines(lines, base_dir)


def format_covering(cov: Covering) -> str:
    return format_gset(cov.total) + "pi " + " ".join(map(str, cov.pi)) + "\n"


def parse_oriented(text: str, base_dir: Optional[Path] = None) -> OrientedCovering:
    lines = _lines(text)
    for no, key, _ in lines:
        if key not in _GSET_KEYS | {"pi", "orient"}:
            raise ParseError(f"line {no}: unexpected keyword {key!r} in an oriented covering file")
    cov = _covering_from_lines(lines, base_dir)
    labels = [(no, rest) for no, key, rest in lines if key == "orient"]
    if len(labels) != 1:
        raise ParseError("expected exactly one 'orient' line")
    label = _single_int(labels[0][1], labels[0][0])
    if label not in (1, 2):
        raise ParseError("orient label must be 1 or 2")
    if cov.degree != 2:
        raise ParseError("an oriented covering must have degree 2")
    return OrientedCovering(cov, label)


def format_oriented(oc: OrientedCovering) -> str:
    return format_covering(oc.covering) + f"orient {oc.anchor_label}\n"


Loaded = Union[FiniteGroup, GSet, Covering, OrientedCovering]

SUFFIXES = {".grp": "group", ".gset": "gset", ".cov": "covering", ".ocov": "oriented"}


def load(path: Union[str, Path], kind: Optional[str] = None) -> Loaded:
    path = Path(path)
    kind = kind or SUFFIXES.get(path.suffix)
    if kind is None:
        raise ParseError(f"cannot tell the file type of {path.name!r}; use .grp/.gset/.cov/.ocov")
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    base = path.parent
    if kind == "group":
        return parse_group(text)
    if kind == "gset":
        return parse_gset(text, base)
    if kind == "covering":
        return parse_covering(text, base)
    return parse_oriented(text, base)
