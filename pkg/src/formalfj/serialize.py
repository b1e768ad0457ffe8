"""Canonical JSON artifacts.

Every artifact is ``{"kind", "version", "params", "data"}`` dumped with
sorted keys and fixed separators, so identical objects give identical bytes.
"""

from __future__ import annotations

import hashlib
import json

from .fjseries import FormalFJSeries, MeromorphicFJSeries, SymmetryReport
from .jacobi import JacobiForm
from .representation import DiscriminantForm, Representation
from .siegel import SiegelForm

VERSION = "0.1.0"

_SINGLE = {
    "jacobi_form": JacobiForm,
    "fj_series": FormalFJSeries,
    "meromorphic_fj": MeromorphicFJSeries,
    "siegel_form": SiegelForm,
    "representation": Representation,
    "discriminant_form": DiscriminantForm,
}
_LISTS = {"jacobi_basis": JacobiForm, "fj_basis": FormalFJSeries}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=1, separators=(",", ": "), ensure_ascii=True) + "\n"


def digest(data):
    if isinstance(data, str):
        data = data.encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


def kind_of(obj):
    if isinstance(obj, list) and obj:
        for kind, cls in _LISTS.items():
            if all(type(x) is cls or isinstance(x, cls) for x in obj):
                return kind
    for kind, cls in _SINGLE.items():
        if isinstance(obj, cls):
            return kind
    if isinstance(obj, SymmetryReport):
        return "symmetry_report"
    return "data"


def encode(obj, kind=None, params=None):
    kind = kind or kind_of(obj)
    if kind in _LISTS:
        data = [x.to_json() for x in obj]
    elif hasattr(obj, "to_json"):
        data = obj.to_json()
    else:
        data = obj
    return {"kind": kind, "version": VERSION, "params": params or {}, "data": data}


def decode(envelope):
    kind, data = envelope["kind"], envelope["data"]
    if kind in _SINGLE:
        return _SINGLE[kind].from_json(data)
    if kind in _LISTS:
        return [_LISTS[kind].from_json(x) for x in data]
    return data


def to_text(obj, kind=None, params=None):
    return dumps(encode(obj, kind, params))


def from_text(text):
    return decode(json.loads(text))


def write_artifact(path, obj, kind=None, params=None):
    text = to_text(obj, kind, params)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    return text


def read_artifact(path):
    with open(path, encoding="ascii") as fh:
        return from_text(fh.read())


def read_envelope(path):
    with open(path, encoding="ascii") as fh:
        return json.loads(fh.read())
