#!/usr/bin/env python3
"""Validate a feqlab JSON report against schemas/report.schema.json.

Usage: validate_report.py SCHEMA REPORT
Exit status 0 when valid, 1 when invalid, 2 on usage or I/O errors.
"""
import json
import sys

import jsonschema


def main(argv):
    if len(argv) != 3:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    try:
        with open(argv[1]) as f:
            schema = json.load(f)
        with open(argv[2]) as f:
            report = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        print(f"validate_report: {e}", file=sys.stderr)
        return 2
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    for e in errors[:10]:
        where = "/".join(str(p) for p in e.path) or "<root>"
        print(f"{where}: {e.message}", file=sys.stderr)
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
