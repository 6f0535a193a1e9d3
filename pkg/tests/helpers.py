"""Shared test helpers."""


def validate_record(obj):
    """Check one output record against the documented JSON shape.

    {"input": str, "dim": int, "flag": [[[int...], int]...],
     "h": [[keystr, [int...]]...], "toric": [int...]}
    with every number an exact int (bool excluded).
    """

    def is_int(v):
        return type(v) is int

    assert isinstance(obj, dict)
    assert set(obj) == {"input", "dim", "flag", "h", "toric"}
    assert isinstance(obj["input"], str)
    assert is_int(obj["dim"])
    for pair in obj["flag"]:
        assert isinstance(pair, list) and len(pair) == 2
        dimset, value = pair
        assert isinstance(dimset, list) and all(is_int(t) for t in dimset)
        assert is_int(value)
    for pair in obj["h"]:
        assert isinstance(pair, list) and len(pair) == 2
        keystr, coeffs = pair
        assert isinstance(keystr, str)
        assert isinstance(coeffs, list) and all(is_int(c) for c in coeffs)
    assert isinstance(obj["toric"], list) and all(is_int(c) for c in obj["toric"])
