"""Validate squares of opposition, with and without import guards.

The plain A/E/I/O square only works when the subject is instantiated.
The guarded squares S1-S3 build that commitment into the propositions
themselves and are valid over every region model.
"""

from oppositions import (
    CANONICAL,
    NAMED_SQUARES,
    all_models,
    is_valid_square,
    named_square,
    nonempty,
    restrict,
)

full16 = all_models()
plain = tuple(CANONICAL[x] for x in ("A", "E", "I", "O"))

print("Plain square over all sixteen models:")
report = is_valid_square(*plain, full16)
for check, ok in report.checks.items():
    print(f"  {'ok  ' if ok else 'FAIL'} {check}")
print(f"  valid: {report.valid}")

print()
print("Plain square once the subject term is assumed nonempty:")
report = is_valid_square(*plain, restrict(full16, [nonempty("A")]))
print(f"  valid: {report.valid}")

print()
print("Guarded squares need no side assumption:")
for name, corners in NAMED_SQUARES.items():
    report = is_valid_square(*named_square(name), full16)
    print(f"  {name}: {', '.join(corners)} -> valid={report.valid}")
