"""Semigroup closure with factorization witnesses.

Given a labeled generator set, compute every element reachable by finite
left-to-right products, together with a shortest witness word for each
element (ties broken lexicographically by label).  The search is a
breadth-first sweep by word length: each level multiplies the newly found
elements by every generator on the right, which suffices for semigroup
closure and keeps witness words shortest.

The hot path works on integer code vectors: a generator is a padded lookup
row ``pad[v] = image of v`` (0 sticky), so composing a batch of elements
with one generator is a fancy-index gather followed by a dot product with
the positional weights.  Frontier × generator candidate blocks are deduped
with ``np.unique`` (first occurrence wins, preserving the lexicographic
tie-break) before consulting the visited table.

Worker threads split each candidate block by generator columns and write
disjoint slices of one preallocated matrix; deduplication happens after the
join, in block order, so results are identical for every worker count.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Mapping

import numpy as np

from .fence import PartialInjection, code_powers, compose, decode, encode
from .generators import GeneratorSet
from .oracle import (
    ElementUniverse,
    read_code_file,
    sidecar_path,
    write_code_file,
)

# cap on entries of one frontier-by-generators candidate block (int64)
_BLOCK_ENTRIES = 1 << 24


class NotGeneratedError(Exception):
    """The target lies outside the generated subsemigroup.

    This is a meaningful mathematical answer (the element has no witness
    word), not a computation failure.
    """

    def __init__(self, n: int, code: int):
        self.n = n
        self.code = code
        super().__init__(
            f"element with code {code} is not in the generated subsemigroup")


@dataclass(frozen=True)
class Word:
    """A non-empty sequence of generator labels, composed left to right."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("witness words are products of length >= 1")

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "·".join(self.labels)

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls(tuple(text.split("·")))


def evaluate_word(word: Word, gens: GeneratorSet | Mapping[str, PartialInjection]) -> PartialInjection:
    """Left-to-right product of the word's generators."""
    mapping = gens.mapping() if isinstance(gens, GeneratorSet) else gens
    result: PartialInjection | None = None
    for label in word.labels:
        try:
            g = mapping[label]
        except KeyError:
            raise KeyError(f"word uses unknown generator label {label!r}") from None
        result = g if result is None else compose(result, g)
    assert result is not None
    return result


@dataclass(frozen=True)
class ClosureStats:
    """Per-level new-element counts, total products formed, and wall time."""

    level_sizes: tuple[int, ...]
    products: int
    seconds: float


@dataclass(eq=False)
class ClosureResult:
    """The closure's member codes plus witness bookkeeping.

    Fresh results carry the BFS parent/generator arrays and reconstruct
    witnesses on demand; cache-loaded results carry the words directly.
    """

    n: int
    labels: tuple[str, ...]
    stats: ClosureStats
    _codes_sorted: np.ndarray
    _order_codes: np.ndarray | None = None
    _parents: np.ndarray | None = None
    _genidx: np.ndarray | None = None
    _words: dict[int, Word] | None = None

    def __len__(self) -> int:
        return len(self._codes_sorted)

    @property
    def member_codes(self) -> np.ndarray:
        return self._codes_sorted

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(int(c) for c in self._codes_sorted)

    def __contains__(self, target: int | PartialInjection) -> bool:
        code = encode(target) if isinstance(target, PartialInjection) else int(target)
        return code in self.members

    @property
    def max_word_length(self) -> int:
        return len(self.stats.level_sizes)

    @cached_property
    def _position(self) -> dict[int, int]:
        assert self._order_codes is not None
        return {int(c): k for k, c in enumerate(self._order_codes)}

    def witness(self, target: int | PartialInjection) -> Word:
        code = encode(target) if isinstance(target, PartialInjection) else int(target)
        if code not in self.members:
            raise NotGeneratedError(self.n, code)
        if self._words is not None:
            return self._words[code]
        assert self._parents is not None and self._genidx is not None
        labels = []
        k = self._position[code]
        while k >= 0:
            labels.append(self.labels[self._genidx[k]])
            k = self._parents[k]
        return Word(tuple(reversed(labels)))

    def witness_items(self) -> Iterator[tuple[int, Word]]:
        """(code, word) pairs in ascending code order."""
        for code in self._codes_sorted:
            yield int(code), self.witness(int(code))

    def save(self, code_path: str | Path, witness_path: str | Path | None = None) -> None:
        code_path = Path(code_path)
        write_code_file(code_path, self.n, self._codes_sorted)
        meta = {
            "n": self.n,
            "count": len(self),
            "labels": list(self.labels),
            "level_sizes": list(self.stats.level_sizes),
            "products": self.stats.products,
        }
        sidecar_path(code_path).write_text(json.dumps(meta, indent=2) + "\n")
        if witness_path is not None:
            lines = [f"{code}\t{word}" for code, word in self.witness_items()]
            Path(witness_path).write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, code_path: str | Path, witness_path: str | Path) -> ClosureResult:
        code_path = Path(code_path)
        n, codes = read_code_file(code_path)
        meta = json.loads(sidecar_path(code_path).read_text())
        if meta["n"] != n or meta["count"] != len(codes):
            raise ValueError(f"sidecar of {code_path} disagrees with the binary header")
        words: dict[int, Word] = {}
        for line in Path(witness_path).read_text().splitlines():
            code_text, _, word_text = line.partition("\t")
            words[int(code_text)] = Word.parse(word_text)
        if set(words) != {int(c) for c in codes}:
            raise ValueError(f"{witness_path} does not cover the member codes exactly")
        stats = ClosureStats(tuple(meta["level_sizes"]), meta["products"], 0.0)
        return cls(n, tuple(meta["labels"]), stats, codes, _words=words)


def _pad_rows(n: int, rows: np.ndarray) -> np.ndarray:
    """Composition lookup: pad[k][v] = image of v under generator k, pad[k][0] = 0."""
    pad = np.zeros((len(rows), n + 1), dtype=np.int64)
    pad[:, 1:] = rows
    return pad


def _close_rows(
    n: int,
    labels: tuple[str, ...],
    rows: np.ndarray,
    workers: int,
) -> ClosureResult:
    """BFS closure over image-row matrices.  ``labels`` must be sorted."""
    started = time.perf_counter()
    g = len(labels)
    powers = np.asarray(code_powers(n), dtype=np.int64)
    pad = _pad_rows(n, rows)

    visited: dict[int, int] = {}
    order_codes: list[int] = []
    parents: list[int] = []
    genidx: list[int] = []
    seed_rows: list[np.ndarray] = []
    seed_codes = rows @ powers
    for k in range(g):
        code = int(seed_codes[k])
        if code not in visited:
            visited[code] = len(order_codes)
            order_codes.append(code)
            parents.append(-1)
            genidx.append(k)
            seed_rows.append(rows[k])

    level_sizes = [len(order_codes)]
    products = 0
    frontier = np.array(seed_rows, dtype=np.int64)
    frontier_start = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            chunk_rows = max(1, _BLOCK_ENTRIES // max(g, 1))
            new_codes: list[int] = []
            new_parents: list[int] = []
            new_genidx: list[int] = []
            for offset in range(0, len(frontier), chunk_rows):
                chunk = frontier[offset:offset + chunk_rows]
                codes = np.empty((len(chunk), g), dtype=np.int64)

                def fill(k0: int, k1: int, chunk=chunk, codes=codes) -> None:
                    for k in range(k0, k1):
                        codes[:, k] = pad[k][chunk] @ powers

                if pool is None or g < 2:
                    fill(0, g)
                else:
                    step = -(-g // workers)
                    bounds = range(0, g, step)
                    list(pool.map(lambda k0: fill(k0, min(k0 + step, g)), bounds))
                products += codes.size
                flat = codes.ravel()
                _, first = np.unique(flat, return_index=True)
                for idx in np.sort(first):
                    code = int(flat[idx])
                    if code in visited:
                        continue
                    visited[code] = len(order_codes)
                    order_codes.append(code)
                    new_codes.append(code)
                    new_parents.append(frontier_start + offset + int(idx) // g)
                    new_genidx.append(int(idx) % g)
            if not new_codes:
                break
            parents.extend(new_parents)
            genidx.extend(new_genidx)
            level_sizes.append(len(new_codes))
            parent_imgs = frontier[np.asarray(new_parents) - frontier_start]
            gsel = np.asarray(new_genidx, dtype=np.int64)
            frontier_start += len(frontier)
            frontier = pad[gsel[:, None], parent_imgs]
    finally:
        if pool is not None:
            pool.shutdown()

    order = np.asarray(order_codes, dtype=np.int64)
    stats = ClosureStats(tuple(level_sizes), products,
                         time.perf_counter() - started)
    return ClosureResult(
        n,
        labels,
        stats,
        np.sort(order),
        _order_codes=order,
        _parents=np.asarray(parents, dtype=np.int64),
        _genidx=np.asarray(genidx, dtype=np.int64),
    )


def close(gens: GeneratorSet, workers: int = 1) -> ClosureResult:
    """Semigroup closure ⟨gens⟩ with shortest, lexicographically least witnesses."""
    if len(gens) == 0:
        raise ValueError("closure needs a non-empty generator set")
    entries = sorted(gens, key=lambda e: e[0])
    labels = tuple(label for label, _ in entries)
    rows = np.array([element.images for _, element in entries], dtype=np.int64)
    return _close_rows(gens.n, labels, rows, workers)


def close_excluding(
    universe: ElementUniverse,
    excluded: Iterable[int] | Iterable[PartialInjection],
    workers: int = 1,
) -> ClosureResult:
    """Closure of (universe ∖ excluded), elements labeled by decimal code."""
    excluded_codes = {
        encode(e) if isinstance(e, PartialInjection) else int(e) for e in excluded}
    stray = excluded_codes - universe.code_set
    if stray:
        raise ValueError(
            f"excluded codes not in the universe: {sorted(stray)[:5]}")
    keep = [k for k, code in enumerate(universe.codes) if code not in excluded_codes]
    if not keep:
        raise ValueError("closure needs a non-empty generator set")
    labeled = sorted((str(universe.codes[k]), k) for k in keep)
    labels = tuple(label for label, _ in labeled)
    rows = universe.images_matrix[[k for _, k in labeled]]
    return _close_rows(universe.n, labels, rows, workers)


def factorize(target: PartialInjection, result: ClosureResult) -> Word:
    """Witness word for the target; raises NotGeneratedError when absent."""
    if target.n != result.n:
        raise ValueError(f"size mismatch: target n={target.n}, closure n={result.n}")
    return result.witness(target)


@dataclass(eq=False)
class GenerationCheck:
    """Outcome of comparing a closure against the enumerated universe."""

    n: int
    generates: bool
    missing: tuple[int, ...]
    extra: tuple[int, ...]
    closure: ClosureResult


def verify_generates(
    gens: GeneratorSet, universe: ElementUniverse, workers: int = 1
) -> GenerationCheck:
    """Does ⟨gens⟩ equal the universe?  Reports code-level differences."""
    if gens.n != universe.n:
        raise ValueError(f"size mismatch: gens n={gens.n}, universe n={universe.n}")
    result = close(gens, workers=workers)
    missing = tuple(sorted(universe.code_set - result.members))
    extra = tuple(sorted(result.members - universe.code_set))
    return GenerationCheck(gens.n, not missing and not extra, missing, extra, result)


def generator_cache_key(gens: GeneratorSet) -> str:
    """Content hash identifying (n, sorted labels, generator maps)."""
    from .fence import format_map

    doc = {
        "n": gens.n,
        "entries": sorted(
            [label, format_map(element)] for label, element in gens),
    }
    digest = hashlib.sha256(json.dumps(doc, separators=(",", ":")).encode())
    return digest.hexdigest()[:16]
