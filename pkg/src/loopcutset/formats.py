"""Plain-text graph formats.

``.wgr`` (weighted multigraph)::

    n m
    id weight        # n lines; weight is a positive decimal or ``inf``
    u v              # m lines; repeat for parallel edges, u == v is a self-loop

``.bn`` (Bayesian network structure)::

    n m
    id domain_size   # n lines, domain_size >= 2
    parent child     # m lines

Tokens are whitespace separated and ``#`` starts a comment.
"""
from __future__ import annotations

import io
import os
from typing import Iterator, List, Union

from .bayes import BayesianDag
from .graph import UNSELECTABLE, WeightedMultigraph

PathOrText = Union[str, os.PathLike, io.TextIOBase]


class FormatError(ValueError):
    pass


def _lines(src) -> Iterator[tuple[int, List[str]]]:
    if isinstance(src, (str, os.PathLike)):
        with open(src) as fh:
            text = fh.read()
    else:
        text = src.read()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_blocks(src, kind: str):
    rows = list(_lines(src))
    if not rows:
        raise FormatError(f"empty {kind} file")
    lineno, head = rows[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must hold two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative counts")
    body = rows[1:]
    if len(body) != n + m:
        raise FormatError(f"expected {n} vertex and {m} edge lines, found {len(body)} lines")
    for lineno, toks in body:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected two fields")
    return body[:n], body[n:]


def _int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: {tok!r} is not an integer") from None
    if value < 0:
        raise FormatError(f"line {lineno}: negative id {value}")
    return value


def read_wgr(src: PathOrText) -> WeightedMultigraph:
    vertex_rows, edge_rows = _parse_blocks(src, "wgr")
    g = WeightedMultigraph()
    for lineno, (vid, wtok) in vertex_rows:
        if wtok.lower() == "inf":
            w = UNSELECTABLE
        else:
            try:
                w = float(wtok)
            except ValueError:
                raise FormatError(f"line {lineno}: bad weight {wtok!r}") from None
        try:
            g.add_vertex(_int(vid, lineno), w)
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    for lineno, (a, b) in edge_rows:
        try:
            g.add_edge(_int(a, lineno), _int(b, lineno))
        except KeyError as exc:
            raise FormatError(f"line {lineno}: {exc.args[0]}") from None
    return g


def write_wgr(g: WeightedMultigraph) -> str:
    out = [f"{len(g)} {g.num_edges}"]
    for v in g.vertices():
        w = g.weight(v)
        out.append(f"{v} {'inf' if w is UNSELECTABLE else repr(w)}")
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_bn(src: PathOrText) -> BayesianDag:
    vertex_rows, edge_rows = _parse_blocks(src, "bn")
    domains = {}
    for lineno, (vid, dom) in vertex_rows:
        v = _int(vid, lineno)
        if v in domains:
            raise FormatError(f"line {lineno}: duplicate vertex {v}")
        domains[v] = _int(dom, lineno)
    edges = [(_int(a, lineno), _int(b, lineno)) for lineno, (a, b) in edge_rows]
    try:
        return BayesianDag(domains, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_bn(d: BayesianDag) -> str:
    out = [f"{len(d.domains)} {len(d.edges)}"]
    out.extend(f"{v} {d.domains[v]}" for v in sorted(d.domains))
    out.extend(f"{u} {v}" for u, v in d.edges)
    return "\n".join(out) + "\n"
