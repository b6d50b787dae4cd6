"""base_category.py

This file handles the base of enrichment: G-graded vector spaces over
Q(ζ_m) with the braiding given by a bicharacter.

Objects are words of grades, one letter per simple summand. The tensor
product of words is their lexicographic product and the dual reverses and
negates, so the monoidal structure is strict on the nose: (u⊗v)⊗w
and u⊗(v⊗w) are the same word and (u⊗v)* = v*⊗u*. Morphisms store one
matrix per grade, codomain x domain, whose rows and columns are the
positions of that grade in the codomain and domain words. Composition is
written left to right: f.then(g) is "f followed by g" and multiplies the
blocks g·f.
"""

# Get packages.
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import numpy as np

# User defined modules.
from enriched_workbench import linalg
from enriched_workbench.errors import ParseError, ShapeMismatch
from enriched_workbench.exact_scalars import Cyclotomic, one, root_of_unity
from enriched_workbench.reports import Report

# Set up logging.
logger = logging.getLogger(__name__)

Grade = Tuple[int, ...]
GradeLike = Union[int, Sequence[int]]


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group Z/n_1 x ... x Z/n_k.

    Attributes:
        cyclic_orders (tuple): The orders n_i."""
    cyclic_orders: Tuple[int, ...]

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        orders = tuple(int(n) for n in self.cyclic_orders)
        if not orders:
            raise ValueError("A group needs at least one cyclic factor.")
        if any(n < 1 for n in orders):
            raise ValueError(f"Cyclic orders must be positive: {orders}.")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def rank(self) -> int:
        """Number of cyclic factors."""
        return len(self.cyclic_orders)

    @property
    def zero(self) -> Grade:
        """The neutral element."""
        return (0,) * self.rank

    def reduce(self, g: GradeLike) -> Grade:
        """Normalise an int or tuple into a reduced grade."""
        if isinstance(g, (int, np.integer)):
            g = (int(g),) + (0,) * (self.rank - 1)
        g = tuple(int(x) for x in g)
        if len(g) != self.rank:
            raise ValueError(f"Grade {g} does not match the group rank "
                             f"{self.rank}.")
        return tuple(x % n for x, n in zip(g, self.cyclic_orders))

    def add(self, g: Grade, h: Grade) -> Grade:
        """g + h."""
        return tuple((a + b) % n
                     for a, b, n in zip(g, h, self.cyclic_orders))

    def neg(self, g: Grade) -> Grade:
        """-g."""
        return tuple((-a) % n for a, n in zip(g, self.cyclic_orders))

    def elements(self) -> List[Grade]:
        """All elements in lexicographic order."""
        return [tuple(g) for g in product(*(range(n)
                                            for n in self.cyclic_orders))]

    def generators(self) -> List[Grade]:
        """The standard generators e_i."""
        gens = []
        for i in range(self.rank):
            g = [0] * self.rank
            g[i] = 1
            gens.append(self.reduce(g))
        return gens

    def format(self, g: Grade) -> str:
        """"1" for rank-one groups, "1,0" otherwise."""
        return str(g[0]) if self.rank == 1 else ",".join(map(str, g))

    def to_json_grade(self, g: Grade):
        """A grade as JSON: an int for rank one, a list otherwise."""
        return g[0] if self.rank == 1 else list(g)


@dataclass(frozen=True)
class Bicharacter:
    """χ(g, h) = ζ_m^{e(g, h)} with e completed from generator data.

    Attributes:
        group (GroupSpec): The grading group.
        root_order (int): m.
        generator_table (tuple): ((i, j, E_ij), ...) for generators e_i, e_j.
            e(g, h) = Σ g_i h_j E_ij mod m."""
    group: GroupSpec
    root_order: int
    generator_table: Tuple[Tuple[int, int, int], ...] = field(default=())

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        if int(self.root_order) < 1:
            raise ValueError("The root order must be positive.")
        object.__setattr__(self, "root_order", int(self.root_order))
        table = tuple(sorted((int(i), int(j), int(e) % self.root_order)
                             for i, j, e in self.generator_table))
        for i, j, _ in table:
            if not (0 <= i < self.group.rank and 0 <= j < self.group.rank):
                raise ValueError(f"Generator index out of range: {(i, j)}.")
        object.__setattr__(self, "generator_table", table)

    @cached_property
    def _matrix(self) -> Dict[Tuple[int, int], int]:
        matrix: Dict[Tuple[int, int], int] = {}
        for i, j, e in self.generator_table:
            matrix[(i, j)] = (matrix.get((i, j), 0) + e) % self.root_order
        return matrix

    def exponent(self, g: Grade, h: Grade) -> int:
        """e(g, h) mod m."""
        total = 0
        for (i, j), e in self._matrix.items():
            total += g[i] * h[j] * e
        return total % self.root_order

    def to_json(self) -> list:
        """Sparse entries [g, h, e] over generators."""
        gens = self.group.generators()
        return [[self.group.to_json_grade(gens[i]),
                 self.group.to_json_grade(gens[j]), e]
                for i, j, e in self.generator_table]


@dataclass(frozen=True)
class GradedObject:
    """An object of V: a word of grades, one letter per simple summand.

    Equality is equality of words, so the order of the letters matters:
    [0, 1] and [1, 0] are distinct (isomorphic) objects. Multiplicity maps
    read from JSON become the grade-sorted word.

    Attributes:
        word (tuple): The grades of the simple summands, in order."""
    word: Tuple[Grade, ...]

    @cached_property
    def multiplicities(self) -> Dict[Grade, int]:
        """grade -> number of summands of that grade."""
        counts: Dict[Grade, int] = {}
        for g in self.word:
            counts[g] = counts.get(g, 0) + 1
        return counts

    @cached_property
    def positions(self) -> Dict[Grade, Tuple[int, ...]]:
        """grade -> positions of that grade in the word."""
        spots: Dict[Grade, List[int]] = {}
        for index, g in enumerate(self.word):
            spots.setdefault(g, []).append(index)
        return {g: tuple(p) for g, p in spots.items()}

    @cached_property
    def local_index(self) -> Tuple[int, ...]:
        """position -> index among the positions of the same grade."""
        local = [0] * len(self.word)
        for spots in self.positions.values():
            for i, p in enumerate(spots):
                local[p] = i
        return tuple(local)

    def mult(self, g: Grade) -> int:
        """Multiplicity of grade g."""
        return self.multiplicities.get(g, 0)

    @property
    def dim(self) -> int:
        """Total dimension."""
        return len(self.word)

    @property
    def name(self) -> str:
        """A readable label such as "d0+d1"."""
        if not self.word:
            return "0"
        return "+".join("d" + (str(g[0]) if len(g) == 1
                               else "(" + ",".join(map(str, g)) + ")")
                        for g in self.word)

    def to_json(self) -> list:
        """The word as a list of grades."""
        return [g[0] if len(g) == 1 else list(g) for g in self.word]

    def __str__(self):
        return self.name

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True, eq=False)
class GradedMorphism:
    """A grade-preserving linear map between words.

    Attributes:
        domain (GradedObject): The source.
        codomain (GradedObject): The target.
        blocks (dict): grade -> codomain(g) x domain(g) matrix over Q(ζ_m);
            an absent block is zero.
        m (int): The scalar order."""
    domain: GradedObject
    codomain: GradedObject
    blocks: Dict[Grade, np.ndarray]
    m: int

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        for g, block in self.blocks.items():
            shape = (self.codomain.mult(g), self.domain.mult(g))
            if shape[0] == 0 or shape[1] == 0:
                raise ShapeMismatch(f"Block at grade {g} for an empty "
                                    f"summand ({self.domain} -> "
                                    f"{self.codomain}).")
            if block.shape != shape:
                raise ShapeMismatch(f"Block at grade {g} has shape "
                                    f"{block.shape}, expected {shape}.")

    def block(self, g: Grade) -> np.ndarray:
        """The block at grade g (zeros when absent)."""
        if g in self.blocks:
            return self.blocks[g]
        return linalg.zeros(self.codomain.mult(g), self.domain.mult(g),
                            self.m)

    def grades(self) -> List[Grade]:
        """Grades where both domain and codomain are nonzero, sorted."""
        return sorted(g for g in self.domain.multiplicities
                      if self.codomain.mult(g))

    def then(self, other: "GradedMorphism") -> "GradedMorphism":
        """Left-to-right composite: self followed by other.

        Raises:
            ShapeMismatch: If self.codomain != other.domain."""
        if self.codomain != other.domain:
            raise ShapeMismatch(f"Cannot compose {self.domain}->"
                                f"{self.codomain} with {other.domain}->"
                                f"{other.codomain}.")
        blocks = {}
        for g in self.blocks:
            if g in other.blocks:
                blocks[g] = linalg.matmul(other.blocks[g], self.blocks[g],
                                          self.m)
        return GradedMorphism(self.domain, other.codomain, blocks, self.m)

    def __add__(self, other: "GradedMorphism") -> "GradedMorphism":
        self._check_parallel(other)
        blocks = dict(self.blocks)
        for g, block in other.blocks.items():
            blocks[g] = blocks[g] + block if g in blocks else block
        return GradedMorphism(self.domain, self.codomain, blocks, self.m)

    def __neg__(self) -> "GradedMorphism":
        return self.scaled(-1)

    def __sub__(self, other: "GradedMorphism") -> "GradedMorphism":
        return self + (-other)

    def scaled(self, factor) -> "GradedMorphism":
        """Multiply by a scalar."""
        return GradedMorphism(
            self.domain, self.codomain,
            {g: linalg.scale(b, factor) for g, b in self.blocks.items()},
            self.m)

    def _check_parallel(self, other: "GradedMorphism"):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ShapeMismatch("Morphisms are not parallel.")

    def is_zero(self) -> bool:
        """True for the zero map."""
        return all(linalg.is_zero(b) for b in self.blocks.values())

    def __eq__(self, other):
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            return False
        for g in set(self.blocks) | set(other.blocks):
            if not linalg.equal(self.block(g), other.block(g)):
                return False
        return True

    __hash__ = None

    # Coordinates -------------------------------------------------------------
    def to_vector(self) -> List[Cyclotomic]:
        """Coordinates in the elementary basis (grades sorted, row-major)."""
        values = []
        for g in self.grades():
            values.extend(self.block(g).flat)
        return values

    def to_json(self) -> dict:
        """Domain, codomain and nonzero blocks in the exact-scalar format."""
        blocks = []
        for g in sorted(self.blocks):
            block = self.blocks[g]
            if linalg.is_zero(block):
                continue
            blocks.append({
                "grade": g[0] if len(g) == 1 else list(g),
                "matrix": [[value.to_json() for value in row]
                           for row in block]})
        return {"domain": self.domain.to_json(),
                "codomain": self.codomain.to_json(),
                "blocks": blocks}

    def __repr__(self):
        return (f"GradedMorphism({self.domain} -> {self.codomain}, "
                f"{ {g: b.tolist() for g, b in self.blocks.items()} })")


def hom_dimension(u: GradedObject, v: GradedObject) -> int:
    """dim V(u -> v) = Σ_g u(g) v(g)."""
    return sum(n * v.mult(g) for g, n in u.multiplicities.items())


@dataclass(frozen=True)
class BaseCategory:
    """The strict pointed braided rigid base V.

    Attributes:
        group (GroupSpec): The grading group.
        chi (Bicharacter): The braiding bicharacter."""
    group: GroupSpec
    chi: Bicharacter

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        if self.chi.group != self.group:
            raise ValueError("The bicharacter is defined on another group.")

    @property
    def m(self) -> int:
        """The global scalar order."""
        return self.chi.root_order

    @property
    def name(self) -> str:
        """e.g. "Z/2 (m=2)"."""
        group = " x ".join(f"Z/{n}" for n in self.group.cyclic_orders)
        return f"{group} (m={self.m})"

    def chi_value(self, g: Grade, h: Grade) -> Cyclotomic:
        """χ(g, h)."""
        return _root(self.m, self.chi.exponent(g, h))

    # Objects -----------------------------------------------------------------
    @property
    def unit(self) -> GradedObject:
        """1_V."""
        return GradedObject((self.group.zero,))

    @property
    def zero_object(self) -> GradedObject:
        """The zero object."""
        return GradedObject(())

    def simple(self, g: GradeLike) -> GradedObject:
        """The simple object δ_g."""
        return GradedObject((self.group.reduce(g),))

    def simples(self) -> List[GradedObject]:
        """All simple objects, in group order."""
        return [GradedObject((g,)) for g in self.group.elements()]

    def word(self, grades: Iterable[GradeLike]) -> GradedObject:
        """An object from an explicit word of grades."""
        return GradedObject(tuple(self.group.reduce(g) for g in grades))

    def from_multiplicities(self, mult: Dict) -> GradedObject:
        """The canonical (grade-sorted) word with the given multiplicities."""
        letters = []
        for g, n in mult.items():
            if int(n) < 0:
                raise ValueError(f"Negative multiplicity at {g}.")
            letters.extend([self.group.reduce(g)] * int(n))
        return GradedObject(tuple(sorted(letters)))

    def parse_object(self, data, path: str = "$") -> GradedObject:
        """Read a word (list) or a multiplicity map (dict) from JSON."""
        try:
            if isinstance(data, dict):
                mult = {}
                for key, n in data.items():
                    grade = (tuple(int(x) for x in key.split(","))
                             if isinstance(key, str) else key)
                    mult[self.group.reduce(grade)] = int(n)
                return self.from_multiplicities(mult)
            if isinstance(data, list):
                return self.word(data)
        except (TypeError, ValueError, AttributeError) as error:
            raise ParseError(str(error), path) from error
        raise ParseError("Expected a list of grades or a multiplicity map.",
                         path)

    def objects_up_to(self, max_dim: int,
                      canonical: bool = True) -> List[GradedObject]:
        """All objects of total dimension 1..max_dim.

        With canonical=True only grade-sorted words are returned (one per
        isomorphism class)."""
        grades = self.group.elements()
        found = []
        for size in range(1, max_dim + 1):
            for letters in product(grades, repeat=size):
                if canonical and list(letters) != sorted(letters):
                    continue
                found.append(GradedObject(tuple(letters)))
        return found

    def tensor_obj(self, u: GradedObject, v: GradedObject) -> GradedObject:
        """u ⊗ v, lexicographic in (letter of u, letter of v)."""
        return GradedObject(tuple(self.group.add(a, b)
                                  for a in u.word for b in v.word))

    def tensor_objs(self, *objs: GradedObject) -> GradedObject:
        """Iterated tensor product (the unit for no arguments)."""
        result = self.unit
        for obj in objs:
            result = self.tensor_obj(result, obj)
        return result

    def dual_obj(self, u: GradedObject) -> GradedObject:
        """u*: reversed word with negated grades."""
        return GradedObject(tuple(self.group.neg(a)
                                  for a in reversed(u.word)))

    def internal_hom(self, u: GradedObject, v: GradedObject) -> GradedObject:
        """V̂(u -> v) = u* ⊗ v."""
        return self.tensor_obj(self.dual_obj(u), v)

    def factor_left(self, u: GradedObject, uw: GradedObject) -> GradedObject:
        """The w with u ⊗ w == uw.

        Raises:
            ShapeMismatch: If uw does not factor through u."""
        if not u.word or len(uw.word) % len(u.word):
            raise ShapeMismatch(f"{uw} does not factor as {u} ⊗ w.")
        size = len(uw.word) // len(u.word)
        first = self.group.neg(u.word[0])
        w = GradedObject(tuple(self.group.add(first, uw.word[j])
                               for j in range(size)))
        if self.tensor_obj(u, w) != uw:
            raise ShapeMismatch(f"{uw} does not factor as {u} ⊗ w.")
        return w

    # Morphisms ---------------------------------------------------------------
    def from_entries(self, domain: GradedObject, codomain: GradedObject,
                     entries: Iterable[Tuple[int, int, Cyclotomic]]
                     ) -> GradedMorphism:
        """Build a morphism from (codomain position, domain position, value).

        Raises:
            ShapeMismatch: If an entry joins positions of different grades."""
        blocks: Dict[Grade, np.ndarray] = {}
        for row, col, value in entries:
            g = codomain.word[row]
            if domain.word[col] != g:
                raise ShapeMismatch(f"Entry ({row}, {col}) joins grades "
                                    f"{g} and {domain.word[col]}.")
            if g not in blocks:
                blocks[g] = linalg.zeros(codomain.mult(g), domain.mult(g),
                                         self.m)
            blocks[g][codomain.local_index[row], domain.local_index[col]] = \
                value
        return GradedMorphism(domain, codomain, blocks, self.m)

    def from_blocks(self, domain: GradedObject, codomain: GradedObject,
                    blocks: Dict[Grade, object]) -> GradedMorphism:
        """Build a morphism from per-grade nested lists or matrices."""
        converted = {}
        for g, rows in blocks.items():
            g = self.group.reduce(g)
            if domain.mult(g) == 0 or codomain.mult(g) == 0:
                continue
            converted[g] = linalg.as_matrix(rows, self.m) if len(rows) else \
                linalg.zeros(codomain.mult(g), domain.mult(g), self.m)
        return GradedMorphism(domain, codomain, converted, self.m)

    def identity(self, u: GradedObject) -> GradedMorphism:
        """1_u."""
        return GradedMorphism(
            u, u, {g: linalg.identity(n, self.m)
                   for g, n in u.multiplicities.items()}, self.m)

    def zero_morphism(self, u: GradedObject,
                      v: GradedObject) -> GradedMorphism:
        """The zero map u -> v."""
        return GradedMorphism(u, v, {}, self.m)

    def hom_basis(self, u: GradedObject,
                  v: GradedObject) -> List[GradedMorphism]:
        """Elementary basis of V(u -> v), ordered like to_vector."""
        basis = []
        for g in sorted(u.multiplicities):
            rows, cols = v.mult(g), u.mult(g)
            for r in range(rows):
                for c in range(cols):
                    block = linalg.zeros(rows, cols, self.m)
                    block[r, c] = one(self.m)
                    basis.append(GradedMorphism(u, v, {g: block}, self.m))
        return basis

    def from_vector(self, u: GradedObject, v: GradedObject,
                    values: Sequence) -> GradedMorphism:
        """Inverse of GradedMorphism.to_vector."""
        values = list(values)
        if len(values) != hom_dimension(u, v):
            raise ShapeMismatch(f"Expected {hom_dimension(u, v)} "
                                f"coordinates, got {len(values)}.")
        blocks = {}
        offset = 0
        for g in sorted(u.multiplicities):
            rows, cols = v.mult(g), u.mult(g)
            if rows == 0:
                continue
            chunk = values[offset:offset + rows * cols]
            offset += rows * cols
            block = np.empty((rows, cols), dtype=object)
            for index, value in enumerate(chunk):
                block[index // cols, index % cols] = (
                    value if isinstance(value, Cyclotomic)
                    else Cyclotomic.rational(self.m, value))
            blocks[g] = block
        return GradedMorphism(u, v, blocks, self.m)

    def tensor_mor(self, f: GradedMorphism,
                   g: GradedMorphism) -> GradedMorphism:
        """f ⊗ g: Kronecker products of blocks, placed in uu' -> vv'."""
        dom = self.tensor_obj(f.domain, g.domain)
        cod = self.tensor_obj(f.codomain, g.codomain)
        width_dom = len(g.domain.word)
        width_cod = len(g.codomain.word)
        blocks: Dict[Grade, np.ndarray] = {}
        for a, f_block in f.blocks.items():
            f_rows = f.codomain.positions[a]
            f_cols = f.domain.positions[a]
            for b, g_block in g.blocks.items():
                h = self.group.add(a, b)
                g_rows = g.codomain.positions[b]
                g_cols = g.domain.positions[b]
                rows = [cod.local_index[i * width_cod + j]
                        for i in f_rows for j in g_rows]
                cols = [dom.local_index[i * width_dom + j]
                        for i in f_cols for j in g_cols]
                if h not in blocks:
                    blocks[h] = linalg.zeros(cod.mult(h), dom.mult(h),
                                             self.m)
                blocks[h][np.ix_(rows, cols)] = linalg.kron(
                    f_block, g_block, self.m)
        return GradedMorphism(dom, cod, blocks, self.m)

    def tensor_mors(self, *morphisms: GradedMorphism) -> GradedMorphism:
        """Iterated tensor product of morphisms."""
        result = morphisms[0]
        for morphism in morphisms[1:]:
            result = self.tensor_mor(result, morphism)
        return result

    def compose(self, *morphisms: GradedMorphism) -> GradedMorphism:
        """Left-to-right composite f_1 then f_2 then ..."""
        result = morphisms[0]
        for morphism in morphisms[1:]:
            result = result.then(morphism)
        return result

    def braiding(self, u: GradedObject, v: GradedObject) -> GradedMorphism:
        """β_{u,v}: u⊗v -> v⊗u, scaled by χ(a, b) on the (a, b) block."""
        n_u, n_v = len(u.word), len(v.word)
        entries = []
        for i, a in enumerate(u.word):
            for j, b in enumerate(v.word):
                entries.append((j * n_u + i, i * n_v + j,
                                self.chi_value(a, b)))
        return self.from_entries(self.tensor_obj(u, v),
                                 self.tensor_obj(v, u), entries)

    def braiding_inverse(self, u: GradedObject,
                         v: GradedObject) -> GradedMorphism:
        """β^{-1}_{u,v}: u⊗v -> v⊗u, the inverse of β_{v,u}."""
        n_u, n_v = len(u.word), len(v.word)
        entries = []
        for i, a in enumerate(u.word):
            for j, b in enumerate(v.word):
                entries.append((j * n_u + i, i * n_v + j,
                                self.chi_value(b, a).inverse()))
        return self.from_entries(self.tensor_obj(u, v),
                                 self.tensor_obj(v, u), entries)

    def ev(self, u: GradedObject) -> GradedMorphism:
        """ev_u: u⊗u* -> 1_V, pairing each letter with its mirror."""
        n = len(u.word)
        entries = [(0, i * n + (n - 1 - i), one(self.m)) for i in range(n)]
        return self.from_entries(self.tensor_obj(u, self.dual_obj(u)),
                                 self.unit, entries)

    def coev(self, u: GradedObject) -> GradedMorphism:
        """coev_u: 1_V -> u*⊗u."""
        n = len(u.word)
        entries = [((n - 1 - i) * n + i, 0, one(self.m)) for i in range(n)]
        return self.from_entries(self.unit,
                                 self.tensor_obj(self.dual_obj(u), u),
                                 entries)

    def mate_forward(self, f: GradedMorphism, u: GradedObject,
                     w: Optional[GradedObject] = None) -> GradedMorphism:
        """The mate w -> V̂(u -> v) of f: u⊗w -> v.

        Raises:
            ShapeMismatch: If f's domain is not u⊗w."""
        if w is None:
            w = self.factor_left(u, f.domain)
        elif self.tensor_obj(u, w) != f.domain:
            raise ShapeMismatch(f"Domain {f.domain} is not {u} ⊗ {w}.")
        return self.tensor_mor(self.coev(u), self.identity(w)).then(
            self.tensor_mor(self.identity(self.dual_obj(u)), f))

    def mate_backward(self, g: GradedMorphism, u: GradedObject,
                      v: Optional[GradedObject] = None) -> GradedMorphism:
        """The mate u⊗w -> v of g: w -> V̂(u -> v).

        Raises:
            ShapeMismatch: If g's codomain is not u*⊗v."""
        u_dual = self.dual_obj(u)
        if v is None:
            v = self.factor_left(u_dual, g.codomain)
        elif self.tensor_obj(u_dual, v) != g.codomain:
            raise ShapeMismatch(f"Codomain {g.codomain} is not {u_dual} ⊗ "
                                f"{v}.")
        return self.tensor_mor(self.identity(u), g).then(
            self.tensor_mor(self.ev(u), self.identity(v)))

    def counit(self, u: GradedObject, v: GradedObject) -> GradedMorphism:
        """ε^V̂_{u->v} = ev_u ⊗ 1_v: u⊗V̂(u -> v) -> v."""
        return self.tensor_mor(self.ev(u), self.identity(v))

    def name_of(self, f: GradedMorphism) -> GradedMorphism:
        """The element 1_V -> f.domain* ⊗ f.codomain naming f."""
        return self.mate_forward(f, f.domain, self.unit)

    def morphism_of_name(self, name: GradedMorphism, x: GradedObject,
                         y: Optional[GradedObject] = None) -> GradedMorphism:
        """Inverse of name_of."""
        return self.mate_backward(name, x, y)

    def to_json(self) -> dict:
        """The base-category document."""
        return {"group": list(self.group.cyclic_orders),
                "root_order": self.m,
                "chi": self.chi.to_json()}

    @classmethod
    def from_json(cls, data, path: str = "$") -> "BaseCategory":
        """Parse {"group": [...], "root_order": m, "chi": [[g, h, e], ...]}.

        Raises:
            ParseError: If the document is malformed."""
        if not isinstance(data, dict):
            raise ParseError("Expected an object.", path)
        for key in ("group", "root_order"):
            if key not in data:
                raise ParseError(f"Missing field {key!r}.", path)
        try:
            group = GroupSpec(tuple(data["group"]))
        except (TypeError, ValueError) as error:
            raise ParseError(str(error), f"{path}.group") from error
        gens = group.generators()
        table = []
        for index, entry in enumerate(data.get("chi", [])):
            where = f"{path}.chi[{index}]"
            try:
                g, h, e = entry
                g, h = group.reduce(g), group.reduce(h)
            except (TypeError, ValueError) as error:
                raise ParseError(str(error), where) from error
            if g not in gens or h not in gens:
                raise ParseError("chi entries must be given on generators.",
                                 where)
            table.append((gens.index(g), gens.index(h), int(e)))
        try:
            chi = Bicharacter(group, int(data["root_order"]), tuple(table))
        except (TypeError, ValueError) as error:
            raise ParseError(str(error), f"{path}.root_order") from error
        return cls(group, chi)


@lru_cache(maxsize=None)
def _root(m: int, k: int) -> Cyclotomic:
    return root_of_unity(m, k)


def make_base(cyclic_orders: Sequence[int], root_order: int,
              entries: Iterable[Tuple[int, int, int]]) -> BaseCategory:
    """Convenience constructor from generator-index entries (i, j, E_ij)."""
    group = GroupSpec(tuple(cyclic_orders))
    return BaseCategory(group, Bicharacter(group, root_order, tuple(entries)))


def validate_bicharacter(base: BaseCategory) -> Report:
    """
    Check that the completed exponent table is normalised and biadditive.

    Args:
        base (BaseCategory): The base to check.

    Returns:
        Report: One check per law; a failure carries the violating pair.
    """
    report = Report("bicharacter")
    group, chi, m = base.group, base.chi, base.m
    elements = group.elements()
    zero = group.zero

    # Normalisation.
    bad = next(((g, h) for g in elements for h in elements
                if (g == zero or h == zero) and chi.exponent(g, h)), None)
    report.record("normalized", "e(0,h) = e(g,0) = 0", bad is None,
                  None if bad is None else
                  {"tuple": [group.format(x) for x in bad]})

    # Additivity in the first variable.
    bad = None
    for g, g2, h in product(elements, repeat=3):
        lhs = chi.exponent(group.add(g, g2), h)
        rhs = (chi.exponent(g, h) + chi.exponent(g2, h)) % m
        if lhs != rhs:
            bad = (g, g2, h)
            break
    report.record("additive_left", "e(g+g',h) = e(g,h) + e(g',h)",
                  bad is None,
                  None if bad is None else
                  {"tuple": [group.format(bad[0]), group.format(bad[1])],
                   "h": group.format(bad[2])})

    # Additivity in the second variable.
    bad = None
    for g, h, h2 in product(elements, repeat=3):
        lhs = chi.exponent(g, group.add(h, h2))
        rhs = (chi.exponent(g, h) + chi.exponent(g, h2)) % m
        if lhs != rhs:
            bad = (g, h, h2)
            break
    report.record("additive_right", "e(g,h+h') = e(g,h) + e(g,h')",
                  bad is None,
                  None if bad is None else
                  {"tuple": [group.format(bad[1]), group.format(bad[2])],
                   "g": group.format(bad[0])})
    logger.debug("Bicharacter on %s: %s", base.name, report.verdict)
    return report


def random_morphism(base: BaseCategory, u: GradedObject, v: GradedObject,
                    rng: random.Random) -> GradedMorphism:
    """A morphism u -> v with small random integer entries."""
    values = [rng.randint(-2, 2) for _ in range(hom_dimension(u, v))]
    return base.from_vector(u, v, values)


def verify_base_laws(base: BaseCategory,
                     objects: Optional[Sequence[GradedObject]] = None,
                     samples: int = 10, seed: int = 0) -> Report:
    """
    Check the braided rigid structure of V exactly.

    Hexagons and the unit component of β run over all pairs/triples of
    objects, zig-zags over every object, naturality of β and the mate
    calculus on seeded random morphisms.

    Args:
        base (BaseCategory): The base.
        objects (list): Objects to sweep (grade-sorted words of dimension
            <= 2 by default).
        samples (int): Random instances per randomised law.
        seed (int): Seed for the random instances.

    Returns:
        Report: One check per law instance.
    """
    report = validate_bicharacter(base)
    if not report.passed:
        return report
    objs = list(objects) if objects is not None else \
        base.objects_up_to(2)
    ident = base.identity

    for u in objs:
        report.compare("braiding_unit", "β_{1,u} = 1_u", [str(u)],
                       base.braiding(base.unit, u), ident(u))
        ud = base.dual_obj(u)
        report.compare("zigzag_left", "(1_u coev_u)∘(ev_u 1_u) = 1_u",
                       [str(u)],
                       base.tensor_mor(ident(u), base.coev(u)).then(
                           base.tensor_mor(base.ev(u), ident(u))), ident(u))
        report.compare("zigzag_right",
                       "(coev_u 1_u*)∘(1_u* ev_u) = 1_u*", [str(u)],
                       base.tensor_mor(base.coev(u), ident(ud)).then(
                           base.tensor_mor(ident(ud), base.ev(u))),
                       ident(ud))

    for u, v, w in product(objs, repeat=3):
        tuple_ = [str(u), str(v), str(w)]
        report.compare("hexagon_left",
                       "β_{u,vw} = (β_{u,v} 1_w)∘(1_v β_{u,w})", tuple_,
                       base.braiding(u, base.tensor_obj(v, w)),
                       base.tensor_mor(base.braiding(u, v), ident(w)).then(
                           base.tensor_mor(ident(v), base.braiding(u, w))))
        report.compare("hexagon_right",
                       "β_{uv,w} = (1_u β_{v,w})∘(β_{u,w} 1_v)", tuple_,
                       base.braiding(base.tensor_obj(u, v), w),
                       base.tensor_mor(ident(u), base.braiding(v, w)).then(
                           base.tensor_mor(base.braiding(u, w), ident(v))))

    rng = random.Random(seed)
    for _ in range(samples):
        u, u2, v, v2 = (rng.choice(objs) for _ in range(4))
        f = random_morphism(base, u, u2, rng)
        g = random_morphism(base, v, v2, rng)
        report.compare("braiding_natural",
                       "(f g)∘β_{u',v'} = β_{u,v}∘(g f)",
                       [str(u), str(u2), str(v), str(v2)],
                       base.tensor_mor(f, g).then(base.braiding(u2, v2)),
                       base.braiding(u, v).then(base.tensor_mor(g, f)))

        u, w, w2, v, v2 = (rng.choice(objs) for _ in range(5))
        f = random_morphism(base, base.tensor_obj(u, w), v, rng)
        h = random_morphism(base, w2, w, rng)
        k = random_morphism(base, v, v2, rng)
        tuple_ = [str(u), str(w), str(v)]
        mate = base.mate_forward(f, u, w)
        report.compare("mate_roundtrip", "mate^{-1}(mate(f)) = f", tuple_,
                       base.mate_backward(mate, u, v), f)
        report.compare("mate_natural_source",
                       "mate((1_u h)∘f) = h∘mate(f)", tuple_,
                       base.mate_forward(
                           base.tensor_mor(ident(u), h).then(f), u, w2),
                       h.then(mate))
        report.compare("mate_natural_target",
                       "mate(f∘k) = mate(f)∘(1_u* k)", tuple_,
                       base.mate_forward(f.then(k), u, w),
                       mate.then(base.tensor_mor(
                           ident(base.dual_obj(u)), k)))
    logger.info("verify_base_laws(%s): %d checks, %s.", base.name,
                len(report.checks), report.verdict)
    return report
