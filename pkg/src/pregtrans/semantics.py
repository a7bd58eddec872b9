"""Desk-scale DisCoCat semantics: finite-dimensional spaces for atoms,
word tensors, reduction witnesses as epsilon contractions, and numeric
naturality checks for translations.

Tensor fixture files are JSON {spaces: {atom: dim}, words: [{word, type,
data}]} where data is either nested arrays or {"seed": n}; seeded data is
generated by the 64-bit LCG below so fixtures reproduce bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import (
    AtomTable,
    CompoundType,
    PregroupError,
    parse_type,
    render_type,
)
from .functors import FunctorSpec, apply_antihomomorphism, apply_homomorphism
from .reduction import ReductionWitness

# Knuth MMIX linear congruential generator; values mapped to [-1, 1).
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class SemanticsError(PregroupError):
    pass


def lcg_floats(seed: int, count: int) -> list[float]:
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state = (state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        out.append((state >> 11) * 2.0**-52 - 1.0)
    return out


def lcg_array(seed: int, shape: tuple[int, ...]) -> np.ndarray:
    size = int(np.prod(shape)) if shape else 1
    return np.array(lcg_floats(seed, size)).reshape(shape)


@dataclass(frozen=True)
class SpaceAssignment:
    """Dimension per atom; all adjoints of an atom share its dimension."""

    dims: tuple[tuple[str, int], ...]

    @classmethod
    def make(cls, dims: dict[str, int], table: AtomTable | None = None) -> "SpaceAssignment":
        for atom, dim in dims.items():
            if dim < 1:
                raise SemanticsError(f"atom {atom!r} has non-positive dimension {dim}")
        if table is not None:
            for atom in table.atoms:
                if atom not in dims:
                    raise SemanticsError(f"atom {atom!r} has no assigned dimension")
            for a, b in table.order_pairs:
                if dims[a] != dims[b]:
                    raise SemanticsError(
                        f"order-related atoms {a!r} and {b!r} have different dimensions"
                    )
        return cls(tuple(sorted(dims.items())))

    def dim(self, atom: str) -> int:
        for name, d in self.dims:
            if name == atom:
                return d
        raise SemanticsError(f"atom {atom!r} has no assigned dimension")

    def shape_of(self, t: CompoundType) -> tuple[int, ...]:
        return tuple(self.dim(p.atom) for p in t.parts)


@dataclass(frozen=True)
class WordTensor:
    """A word meaning: one tensor axis per simple type of its grammar type."""

    word: str
    type: CompoundType
    data: np.ndarray

    def __post_init__(self):
        if self.data.ndim != len(self.type):
            raise SemanticsError(
                f"{self.word!r}: tensor has {self.data.ndim} axes, "
                f"type {render_type(self.type)!r} has {len(self.type)}"
            )
        if not np.all(np.isfinite(self.data)):
            raise SemanticsError(f"{self.word!r}: tensor has non-finite entries")


def make_word_tensor(word: str, t: CompoundType, data, spaces: SpaceAssignment) -> WordTensor:
    data = np.asarray(data, dtype=float)
    wt = WordTensor(word, t, data)
    if data.shape != spaces.shape_of(t):
        raise SemanticsError(
            f"{word!r}: tensor shape {data.shape} does not match {spaces.shape_of(t)}"
        )
    return wt


def epsilon(dim: int):
    """The basis pairing on a dim-dimensional space: (u, v) -> <u, v>."""
    if dim < 1:
        raise SemanticsError("dimension must be >= 1")

    def pairing(u, v) -> float:
        u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
        if u.shape != (dim,) or v.shape != (dim,):
            raise SemanticsError(f"epsilon({dim}) applied to shapes {u.shape}, {v.shape}")
        return float(u @ v)

    return pairing


def eta(dim: int) -> np.ndarray:
    """The unit 1 -> V (x) V: the identity pairing tensor."""
    if dim < 1:
        raise SemanticsError("dimension must be >= 1")
    return np.eye(dim)


def interpret(
    witness: ReductionWitness,
    tensors: list[WordTensor],
    spaces: SpaceAssignment,
) -> np.ndarray:
    """Contract every linked axis pair of the sentence tensor, leaving the
    residue axes in order: the meaning of the reduced phrase."""
    flat = CompoundType()
    for wt in tensors:
        flat = flat + wt.type
    n = len(flat)
    if not witness.covers(n):
        raise SemanticsError("witness does not match the concatenated word types")
    for i, j in witness.links:
        if spaces.dim(flat[i].atom) != spaces.dim(flat[j].atom):
            raise SemanticsError(
                f"link ({i}, {j}) pairs axes of dimensions "
                f"{spaces.dim(flat[i].atom)} and {spaces.dim(flat[j].atom)}"
            )
    if not tensors:
        return np.array(1.0)
    axis_index: dict[int, int] = {}
    counter = 0
    for i, j in sorted(witness.links):
        axis_index[i] = axis_index[j] = counter
        counter += 1
    out_axes = []
    for i in witness.residue:
        axis_index[i] = counter
        out_axes.append(counter)
        counter += 1
    operands = []
    pos = 0
    for wt in tensors:
        if wt.data.shape != spaces.shape_of(wt.type):
            raise SemanticsError(f"{wt.word!r}: tensor shape mismatch")
        operands.append(wt.data)
        operands.append([axis_index[pos + k] for k in range(len(wt.type))])
        pos += len(wt.type)
    return np.einsum(*operands, out_axes, optimize=True)


@dataclass(frozen=True)
class AlphaSpec:
    """Components of a translation natural transformation: one linear map
    per source atom, plus optional per-word target tensors that bypass
    the matrix path."""

    component_maps: tuple[tuple[str, np.ndarray], ...]
    word_overrides: tuple[tuple[str, WordTensor], ...] = ()

    @classmethod
    def make(cls, component_maps: dict[str, np.ndarray], word_overrides=None) -> "AlphaSpec":
        comps = []
        for atom, mat in sorted(component_maps.items()):
            mat = np.asarray(mat, dtype=float)
            if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
                raise SemanticsError(f"component for {atom!r} is not a square matrix")
            if abs(np.linalg.det(mat)) < 1e-12:
                raise SemanticsError(f"component for {atom!r} is not invertible")
            comps.append((atom, mat))
        overrides = tuple(sorted((word_overrides or {}).items()))
        return cls(tuple(comps), overrides)

    def component(self, atom: str) -> np.ndarray:
        for name, mat in self.component_maps:
            if name == atom:
                return mat
        raise SemanticsError(f"no component map for atom {atom!r}")

    def override(self, word: str) -> WordTensor | None:
        for name, wt in self.word_overrides:
            if name == word:
                return wt
        return None


def _detect_reverse(source: CompoundType, image: CompoundType) -> bool:
    fwd = [p.exponent for p in image.parts] == [p.exponent for p in source.parts]
    rev = [p.exponent for p in image.parts] == [-p.exponent for p in reversed(source.parts)]
    if fwd:
        return False
    if rev:
        return True
    raise SemanticsError("image type matches neither the direct nor the reversed source")


def apply_alpha(
    alpha: AlphaSpec,
    t: WordTensor,
    image_type: CompoundType,
    reverse: bool | None = None,
) -> WordTensor:
    """Carry a word tensor into the target model: even-exponent axes are
    transformed by the atom's component map, odd-exponent axes by its
    inverse transpose (so every epsilon pairing is preserved); axis order
    follows the functor image."""
    override = alpha.override(t.word)
    if override is not None:
        return override
    if len(image_type) != len(t.type):
        raise SemanticsError(
            f"{t.word!r}: image type length {len(image_type)} != {len(t.type)}"
        )
    if reverse is None:
        reverse = _detect_reverse(t.type, image_type)
    data = t.data
    source_parts = t.type.parts
    if reverse:
        data = np.transpose(data, tuple(range(data.ndim - 1, -1, -1)))
        source_parts = tuple(reversed(source_parts))
    for k, (src, img) in enumerate(zip(source_parts, image_type.parts)):
        mat = alpha.component(src.atom)
        if img.exponent % 2:
            mat = np.linalg.inv(mat).T
        data = np.moveaxis(np.tensordot(mat, data, axes=(1, k)), 0, k)
    return WordTensor(t.word, image_type, data)


@dataclass(frozen=True)
class NaturalityReport:
    max_residual: float
    tolerance: float
    details: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.max_residual <= self.tolerance


def _spaces_from_tensors(tensors: list[WordTensor]) -> SpaceAssignment:
    dims: dict[str, int] = {}
    for wt in tensors:
        for part, size in zip(wt.type.parts, wt.data.shape):
            if dims.setdefault(part.atom, size) != size:
                raise SemanticsError(f"inconsistent dimensions for atom {part.atom!r}")
    return SpaceAssignment.make(dims)


def check_naturality(
    alpha: AlphaSpec,
    src_witness: ReductionWitness,
    src_tensors: list[WordTensor],
    functor: FunctorSpec,
    tgt_witness: ReductionWitness,
    tolerance: float,
) -> NaturalityReport:
    """Verify the translation square numerically: interpreting then
    applying alpha must equal applying alpha word-wise then interpreting
    in the target model, within the tolerance (max-abs norm)."""
    if len(src_witness.links) != len(tgt_witness.links) or len(src_witness.residue) != len(
        tgt_witness.residue
    ):
        raise SemanticsError("source and target witnesses do not correspond")
    if functor.mode == "homomorphism":
        reverse = False
    elif functor.mode == "antihomomorphism":
        reverse = True
    else:
        raise SemanticsError("naturality checks support homomorphism and anti-homomorphism modes")

    src_spaces = _spaces_from_tensors(src_tensors)
    flat = CompoundType()
    for wt in src_tensors:
        flat = flat + wt.type

    # reduce in the source, then translate the residue
    meaning = interpret(src_witness, src_tensors, src_spaces)
    for k, idx in enumerate(src_witness.residue):
        part = flat[idx]
        mat = alpha.component(part.atom)
        if part.exponent % 2:
            mat = np.linalg.inv(mat).T
        meaning = np.moveaxis(np.tensordot(mat, meaning, axes=(1, k)), 0, k)
    if reverse and meaning.ndim > 1:
        meaning = np.transpose(meaning, tuple(range(meaning.ndim - 1, -1, -1)))

    # translate word-wise, then reduce in the target
    image = apply_antihomomorphism if reverse else apply_homomorphism
    translated = [
        apply_alpha(alpha, wt, image(functor, wt.type), reverse=reverse) for wt in src_tensors
    ]
    if reverse:
        translated = list(reversed(translated))
    tgt_spaces = _spaces_from_tensors(translated)
    target_meaning = interpret(tgt_witness, translated, tgt_spaces)

    if meaning.shape != target_meaning.shape:
        raise SemanticsError(
            f"path shapes differ: {meaning.shape} vs {target_meaning.shape}"
        )
    residual = float(np.max(np.abs(meaning - target_meaning))) if meaning.size else 0.0
    details = (
        f"square over {len(src_tensors)} words: residual {residual:.3e} "
        f"(tolerance {tolerance:.3e})",
    )
    return NaturalityReport(residual, tolerance, details)


def load_tensor_fixture(path: str | Path) -> tuple[SpaceAssignment, list[WordTensor]]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    dims = {atom: int(d) for atom, d in data["spaces"].items()}
    spaces = SpaceAssignment.make(dims)
    table = AtomTable(dims.keys())
    tensors = []
    for raw in data["words"]:
        t = parse_type(raw["type"], table)
        shape = spaces.shape_of(t)
        payload = raw["data"]
        if isinstance(payload, dict):
            array = lcg_array(int(payload["seed"]), shape)
        else:
            array = np.asarray(payload, dtype=float)
        tensors.append(make_word_tensor(raw["word"], t, array, spaces))
    return spaces, tensors
