"""JSON output with stable key order and 17-significant-digit floats."""
from __future__ import annotations

import hashlib
import json
import math


def _norm(obj):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in output")
        return _Float(obj)
    if isinstance(obj, dict):
        return {str(k): _norm(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_norm(v) for v in obj]
    if isinstance(obj, bytes):
        return obj.decode("ascii")
    return obj


class _Float(float):
    def __repr__(self) -> str:
        return format(float(self), ".17g")


class _Encoder(json.JSONEncoder):
    def iterencode(self, o, _one_shot=False):
        # the C encoder ignores float subclasses' repr, so use the Python one
        return json.encoder._make_iterencode(
            {}, self.default, json.encoder.encode_basestring_ascii, self.indent,
            lambda f: repr(f) if isinstance(f, _Float) else float.__repr__(f),
            self.key_separator, self.item_separator, self.sort_keys, self.skipkeys, _one_shot,
        )(o, 0)


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(_norm(obj), cls=_Encoder, indent=indent, sort_keys=True) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
