"""Walk through the bitstring encoding of the four classical forms.

Every categorical proposition gets a 16-bit truth profile, one bit per
region model, and opposition relations become bitwise tests.
"""

from oppositions import (
    CANONICAL,
    MODEL_NAME,
    all_models,
    bitstring,
    evaluate,
    nonempty,
    relate,
    restrict,
)

full16 = all_models()

print("Truth profiles over all sixteen region models")
print("model order:", " ".join(MODEL_NAME[m] for m in full16))
for letter in ("A", "E", "I", "O", "A'", "E'", "I'", "O'"):
    print(f"  {letter:<2} -> {bitstring(CANONICAL[letter], full16)}")

print()
print("The last bit is w16, the model with no individuals at all:")
w16 = full16[15]
for letter in ("A", "E", "I", "O"):
    print(f"  {letter} at w16: {evaluate(CANONICAL[letter], w16)}")

print()
print("Relations are computed from the profiles alone.")
a, e = bitstring(CANONICAL["A"], full16), bitstring(CANONICAL["E"], full16)
print(f"  A vs E unrestricted: {relate(a, e).value}")

restricted = restrict(full16, [nonempty("A")])
a, e = bitstring(CANONICAL["A"], restricted), bitstring(CANONICAL["E"], restricted)
print(f"  A vs E when A is instantiated: {relate(a, e).value}")
