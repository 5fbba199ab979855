"""Survey the 256-proposition family and its import behavior.

Crossing the eight lettered cores with signed existence conjuncts for
each predicate, then closing under negation, yields 256 propositions.
This script counts their distinct truth profiles, the members carrying
import in each signed term, and the valid squares they form.
"""

from collections import Counter

from oppositions import (
    all_models,
    bitstring,
    enumerate_squares,
    family_256,
    has_import,
)

full16 = all_models()
family = family_256()

profiles = Counter(str(bitstring(p.formula, full16)) for p in family)
print(f"family size: {len(family)}")
print(f"distinct truth profiles: {len(profiles)}")
most, hits = profiles.most_common(1)[0]
print(f"most shared profile: {most} ({hits} members)")

print()
for term in ("A", "~A", "B", "~B"):
    n = sum(1 for p in family if has_import(p.formula, term, full16))
    print(f"members with import in {term}: {n}")

print()
named = [p for p in family if p.name is not None]
print(f"members with a commitment-grammar name: {len(named)}")
print("a few examples:", ", ".join(p.name for p in named[:4]))

print()
squares = enumerate_squares(family, full16)
print(f"valid squares inside the family: {len(squares)}")
