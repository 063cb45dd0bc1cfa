"""JSON schemas for problem documents and machine-readable reports (version 1)."""

SCHEMA_VERSION = 1

_FIELD = {
    "oneOf": [
        {"const": "rationals"},
        {"type": "object", "properties": {"prime": {"type": "integer", "minimum": 2}},
         "required": ["prime"], "additionalProperties": False},
    ]
}

INPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "problem document",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "field": _FIELD,
        "hypersurface": {"type": "string"},
        "generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2},
        "delta": {"type": "integer", "minimum": 1},
        "genus": {"type": "integer", "minimum": 0},
        "genus_override": {"type": "integer", "minimum": 0},
        "characteristic": {"enum": ["0", "p>>0", 0]},
        "twists": {"type": "array", "items": {"type": "integer"}},
        "element": {"type": "string"},
        "flags": {
            "type": "object",
            "properties": {
                "semistable": {"type": "boolean"},
                "strongly_semistable": {"type": "boolean"},
                "indecomposable": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "sweep": {
            "type": "object",
            "properties": {"lo": {"type": "integer"}, "hi": {"type": "integer"}},
            "required": ["lo", "hi"],
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

BOUND_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["inclusion", "exclusion", "vanishing"]},
        "value": {"type": "integer"},
        "tag": {"type": "string", "minLength": 3},
        "threshold": RATIONAL,
        "strict": {"type": "boolean"},
        "caveat": {"type": ["string", "null"]},
        "note": {"type": ["string", "null"]},
    },
    "required": ["kind", "value", "tag", "threshold", "strict"],
    "additionalProperties": False,
}

SLOPE_SCHEMA = {
    "type": "object",
    "properties": {"value": RATIONAL, "tag": {"type": "string", "minLength": 3}},
    "required": ["value", "tag"],
    "additionalProperties": False,
}

BOUNDS_OUTPUT_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"const": "bounds"},
        "input": {"type": "object"},
        "slopes": {"type": "object", "additionalProperties": SLOPE_SCHEMA},
        "slopes_strict": {"type": "boolean"},
        "inclusion": {"oneOf": [BOUND_SCHEMA, {"type": "null"}]},
        "exclusion": {"oneOf": [BOUND_SCHEMA, {"type": "null"}]},
        "vanishing": {"oneOf": [BOUND_SCHEMA, {"type": "null"}]},
        "bounds": {"type": "array", "items": BOUND_SCHEMA},
        "caveats": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
        "splitting_warning": {"type": ["string", "null"]},
    },
    "required": ["schema_version", "command", "inclusion", "exclusion", "bounds", "slopes"],
    "additionalProperties": False,
}
