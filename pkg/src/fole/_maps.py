"""Finite functions represented as dicts."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .errors import DomainMismatch


def require_total(
    fn: Mapping[str, str],
    domain: Iterable[str],
    codomain: Iterable[str] | None = None,
    *,
    what: str = "map",
    exc: type[DomainMismatch] = DomainMismatch,
) -> None:
    """Raise ``exc`` unless ``fn`` is defined on all of ``domain`` and lands in ``codomain``."""
    domain = set(domain)
    missing = sorted(domain - fn.keys())
    if missing:
        raise exc(f"{what} is not total: undefined on {missing}")
    if codomain is not None:
        codomain = set(codomain)
        stray = sorted({fn[x] for x in domain} - codomain)
        if stray:
            raise exc(f"{what} leaves its codomain: {stray}")


def identity(names: Iterable[str]) -> dict[str, str]:
    return {n: n for n in names}


def compose(first: Mapping[str, str], then: Mapping[str, str]) -> dict[str, str]:
    """Diagrammatic composite ``first · then`` (apply ``first``, then ``then``)."""
    return {a: then[b] for a, b in first.items()}


def restrict(fn: Mapping[str, str], domain: Iterable[str]) -> dict[str, str]:
    return {a: fn[a] for a in domain}


def is_identity(fn: Mapping[str, str], domain: Iterable[str]) -> bool:
    domain = set(domain)
    return fn.keys() >= domain and all(fn[x] == x for x in domain)
