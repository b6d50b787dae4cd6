"""serialization.py

This file handles reading and writing the JSON documents of the workbench:
base categories, morphisms, V-categories, V-monoidal categories, tensoring
witnesses and completion windows. All scalars use the exact
{"m": m, "coeffs": {"k": "p/q"}} form, so a written file reads back to
identical structure tables.
"""

# Get packages.
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, List, Optional, Sequence

# User defined modules.
from enriched_workbench.base_category import (
    BaseCategory, GradedMorphism, GradedObject)
from enriched_workbench.closed import DualityData
from enriched_workbench.completion import CompletionObject
from enriched_workbench.enriched_core import VCategory
from enriched_workbench.errors import ParseError
from enriched_workbench.exact_scalars import Cyclotomic
from enriched_workbench.module_correspondence import (
    TensoringData, tensoring_from_tables)
from enriched_workbench.utils import tuples
from enriched_workbench.vmonoidal import VMonoidalCategory

# Set up logging.
logger = logging.getLogger(__name__)


def dumps(data: Any) -> str:
    """Stable JSON text (sorted keys, two-space indent)."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def load_json(path) -> Any:
    """
    Read a JSON file.

    Raises:
        ParseError: With the line and column of a syntax error.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ParseError(f"Cannot read {path}: {error}") from error
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(error.msg,
                         f"{path.name}:{error.lineno}:{error.colno}") \
            from error


def write_atomic(path, text: str):
    """Write text to path in one rename so readers never see a partial
    file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as file:
            file.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, path)
    except Exception:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.info("Wrote %s.", path)


def label_to_json(x) -> str:
    """Object labels are written as strings."""
    return str(x)


def _field(data, key: str, path: str):
    if not isinstance(data, dict):
        raise ParseError("Expected an object.", path)
    if key not in data:
        raise ParseError(f"Missing field {key!r}.", path)
    return data[key]


def _list(data, path: str) -> list:
    if not isinstance(data, list):
        raise ParseError("Expected a list.", path)
    return data


# Morphisms -------------------------------------------------------------------
def morphism_from_json(base: BaseCategory, data,
                       path: str = "$") -> GradedMorphism:
    """
    Parse {"domain": obj, "codomain": obj, "blocks": [{"grade", "matrix"}]}.

    Raises:
        ParseError: If a field is malformed.
        ShapeMismatch: If a block does not fit its grade.
    """
    domain = base.parse_object(_field(data, "domain", path),
                               f"{path}.domain")
    codomain = base.parse_object(_field(data, "codomain", path),
                                 f"{path}.codomain")
    blocks = {}
    for i, entry in enumerate(_list(data.get("blocks", []),
                                    f"{path}.blocks")):
        where = f"{path}.blocks[{i}]"
        try:
            grade = base.group.reduce(_field(entry, "grade", where))
        except (TypeError, ValueError) as error:
            if isinstance(error, ParseError):
                raise
            raise ParseError(str(error), f"{where}.grade") from error
        rows = _list(_field(entry, "matrix", where), f"{where}.matrix")
        matrix = []
        for r, row in enumerate(_list(rows, f"{where}.matrix")):
            matrix.append([Cyclotomic.from_json(value,
                                                f"{where}.matrix[{r}][{c}]")
                           for c, value in enumerate(
                               _list(row, f"{where}.matrix[{r}]"))])
        for value in (v for row in matrix for v in row):
            if value.m != base.m:
                raise ParseError(f"Scalar order {value.m} differs from the "
                                 f"base order {base.m}.", where)
        if domain.mult(grade) == 0 or codomain.mult(grade) == 0:
            raise ParseError(f"No summand of grade {grade} on both sides.",
                             where)
        blocks[grade] = matrix
    return base.from_blocks(domain, codomain, blocks)


# V-categories --------------------------------------------------------------
def vcat_to_json(C: VCategory) -> dict:
    """Every hom object, identity and composition of C."""
    objs = C.objects
    return {
        "base": C.base.to_json(),
        "objects": [label_to_json(a) for a in objs],
        "hom": [{"from": label_to_json(a), "to": label_to_json(b),
                 "object": C.hom(a, b).to_json()}
                for a, b in tuples(objs, 2)],
        "identity": [{"object": label_to_json(a),
                      "morphism": C.ident(a).to_json()} for a in objs],
        "composition": [{"a": label_to_json(a), "b": label_to_json(b),
                         "c": label_to_json(c),
                         "morphism": C.comp(a, b, c).to_json()}
                        for a, b, c in tuples(objs, 3)],
    }


def _objects(data, path: str) -> List[str]:
    objs = _list(_field(data, "objects", path), f"{path}.objects")
    if not objs:
        raise ParseError("A category needs at least one object.",
                         f"{path}.objects")
    labels = [str(a) for a in objs]
    if len(set(labels)) != len(labels):
        raise ParseError("Duplicate object labels.", f"{path}.objects")
    return labels


def _known(label, objs: Sequence[str], path: str) -> str:
    label = str(label)
    if label not in objs:
        raise ParseError(f"Unknown object {label!r}.", path)
    return label


def vcat_from_json(data, path: str = "$", name: str = "C") -> VCategory:
    """
    Parse a V-category document into explicit tables.

    Raises:
        ParseError: If the document is malformed or incomplete.
    """
    base = BaseCategory.from_json(_field(data, "base", path), f"{path}.base")
    objs = _objects(data, path)
    hom, ident, comp = {}, {}, {}
    for i, entry in enumerate(_list(_field(data, "hom", path),
                                    f"{path}.hom")):
        where = f"{path}.hom[{i}]"
        a = _known(_field(entry, "from", where), objs, f"{where}.from")
        b = _known(_field(entry, "to", where), objs, f"{where}.to")
        hom[(a, b)] = base.parse_object(_field(entry, "object", where),
                                        f"{where}.object")
    for i, entry in enumerate(_list(_field(data, "identity", path),
                                    f"{path}.identity")):
        where = f"{path}.identity[{i}]"
        a = _known(_field(entry, "object", where), objs, f"{where}.object")
        ident[a] = morphism_from_json(base, _field(entry, "morphism", where),
                                      f"{where}.morphism")
    for i, entry in enumerate(_list(_field(data, "composition", path),
                                    f"{path}.composition")):
        where = f"{path}.composition[{i}]"
        key = tuple(_known(_field(entry, k, where), objs, f"{where}.{k}")
                    for k in ("a", "b", "c"))
        comp[key] = morphism_from_json(base, _field(entry, "morphism", where),
                                       f"{where}.morphism")
    missing = [f"hom{pair}" for pair in tuples(objs, 2) if pair not in hom]
    missing += [f"identity({a})" for a in objs if a not in ident]
    missing += [f"composition{t}" for t in tuples(objs, 3) if t not in comp]
    if missing:
        raise ParseError(f"Missing entries: {', '.join(missing[:5])}"
                         + (" ..." if len(missing) > 5 else ""), path)
    logger.info("Read V-category with %d objects.", len(objs))
    return VCategory(base, objs, hom, ident, comp,
                     str(data.get("name", name)))


def vmonoidal_to_json(M: VMonoidalCategory,
                      duals: Optional[DualityData] = None) -> dict:
    """vcat_to_json plus the unit, object products and tensor morphisms
    (and the duals, when given)."""
    data = vcat_to_json(M.vcat)
    objs = M.objects
    data["unit"] = label_to_json(M.unit)
    data["obj_tensor"] = [{"a": label_to_json(a), "b": label_to_json(b),
                           "product": label_to_json(M.tensor_obj(a, b))}
                          for a, b in tuples(objs, 2)]
    data["tensor_mor"] = [
        {"a": label_to_json(a), "b": label_to_json(b),
         "c": label_to_json(c), "d": label_to_json(d),
         "morphism": M.tensor_mor(a, b, c, d).to_json()}
        for a, b, c, d in tuples(objs, 4)]
    if duals is not None:
        data["duals"] = duals_to_json(duals)
    return data


def vmonoidal_from_json(data, path: str = "$",
                        name: str = "C") -> VMonoidalCategory:
    """
    Parse a V-monoidal document.

    Raises:
        ParseError: If the document is malformed or incomplete.
    """
    C = vcat_from_json(data, path, name)
    base, objs = C.base, C.objects
    unit = _known(_field(data, "unit", path), objs, f"{path}.unit")
    products, tensors = {}, {}
    for i, entry in enumerate(_list(_field(data, "obj_tensor", path),
                                    f"{path}.obj_tensor")):
        where = f"{path}.obj_tensor[{i}]"
        a = _known(_field(entry, "a", where), objs, f"{where}.a")
        b = _known(_field(entry, "b", where), objs, f"{where}.b")
        products[(a, b)] = _known(_field(entry, "product", where), objs,
                                  f"{where}.product")
    for i, entry in enumerate(_list(_field(data, "tensor_mor", path),
                                    f"{path}.tensor_mor")):
        where = f"{path}.tensor_mor[{i}]"
        key = tuple(_known(_field(entry, k, where), objs, f"{where}.{k}")
                    for k in ("a", "b", "c", "d"))
        tensors[key] = morphism_from_json(
            base, _field(entry, "morphism", where), f"{where}.morphism")
    missing = [f"obj_tensor{p}" for p in tuples(objs, 2)
               if p not in products]
    missing += [f"tensor_mor{t}" for t in tuples(objs, 4) if t not in tensors]
    if missing:
        raise ParseError(f"Missing entries: {', '.join(missing[:5])}"
                         + (" ..." if len(missing) > 5 else ""), path)
    return VMonoidalCategory(C, unit, products, tensors, C.name)


# Tensorings and windows ------------------------------------------------------
def tensoring_to_json(T: TensoringData) -> list:
    """[{"a", "v", "target", "eta"}, ...] in scope order."""
    return [{"a": label_to_json(a), "v": v.to_json(),
             "target": label_to_json(T.act(a, v)),
             "eta": T.eta(a, v).to_json()} for a, v in T.scope]


def tensoring_from_json(C: VCategory, data, path: str = "$",
                        name: str = "T") -> TensoringData:
    """
    Parse tensoring witnesses for C.

    Raises:
        ParseError: If an entry is malformed or names an unknown object.
    """
    base, objs = C.base, [str(a) for a in C.objects]
    entries = []
    for i, entry in enumerate(_list(data, path)):
        where = f"{path}[{i}]"
        a = _known(_field(entry, "a", where), objs, f"{where}.a")
        v = base.parse_object(_field(entry, "v", where), f"{where}.v")
        target = _known(_field(entry, "target", where), objs,
                        f"{where}.target")
        eta = morphism_from_json(base, _field(entry, "eta", where),
                                 f"{where}.eta")
        entries.append((a, v, target, eta))
    return tensoring_from_tables(C, entries, name)


def window_from_json(C: VCategory, data,
                     path: str = "$") -> List[CompletionObject]:
    """
    Parse [{"base": a, "weight": obj}, ...].

    Raises:
        ParseError: If an entry is malformed or its weight is zero.
    """
    base, objs = C.base, [str(a) for a in C.objects]
    window = []
    for i, entry in enumerate(_list(data, path)):
        where = f"{path}[{i}]"
        a = _known(_field(entry, "base", where), objs, f"{where}.base")
        weight = base.parse_object(_field(entry, "weight", where),
                                   f"{where}.weight")
        try:
            window.append(CompletionObject(a, weight))
        except ValueError as error:
            raise ParseError(str(error), f"{where}.weight") from error
    return window


def weights_from_json(base: BaseCategory, data,
                      path: str = "$") -> List[GradedObject]:
    """Parse a list of objects of V."""
    return [base.parse_object(item, f"{path}[{i}]")
            for i, item in enumerate(_list(data, path))]


def duals_to_json(duals: DualityData) -> list:
    """[{"a", "dual", "coev", "ev"}, ...]."""
    return [{"a": label_to_json(a), "dual": label_to_json(duals.dual[a]),
             "coev": duals.coev[a].to_json(), "ev": duals.ev[a].to_json()}
            for a in duals.monoidal.objects]


def duals_from_json(M: VMonoidalCategory, data,
                    path: str = "$.duals") -> DualityData:
    """
    Parse right duals of a V-monoidal category.

    Raises:
        ParseError: If an entry is malformed.
        ClosednessDataMissing: If some object has no dual.
    """
    base, objs = M.base, [str(a) for a in M.objects]
    dual, coev, ev = {}, {}, {}
    for i, entry in enumerate(_list(data, path)):
        where = f"{path}[{i}]"
        a = _known(_field(entry, "a", where), objs, f"{where}.a")
        dual[a] = _known(_field(entry, "dual", where), objs, f"{where}.dual")
        coev[a] = morphism_from_json(base, _field(entry, "coev", where),
                                     f"{where}.coev")
        ev[a] = morphism_from_json(base, _field(entry, "ev", where),
                                   f"{where}.ev")
    return DualityData(M, dual, coev, ev)
