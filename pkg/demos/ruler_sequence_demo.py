"""Walk through the ruler sequence and its minimal-prefix-sum property.

The sequence 1, 2, 1, 3, 1, 2, 1, 4, ... counts the bits from the right up
to and including the first set bit.  Its prefix of any length k has the
smallest sum among all length-k windows, which is exactly what lets the
staircase disks nest without overlapping.
"""

from translate_kiss import PrefixTable, check_lemma1_exhaustive, prefix_sum, ruler

print("First 32 terms:")
print(" ", [ruler(i) for i in range(1, 33)])

print("\nPowers of two mark the record highs:")
for j in range(7):
    print(f"  s_{2**j} = {ruler(2**j)}")

table = PrefixTable.build(1 << 16)
print("\nPrefix sums at powers of two are one less than the next power:")
for k in range(1, 9):
    print(f"  sum of first {2**k:4d} terms = {prefix_sum(2**k, table)}")

print("\nExhaustive window check (k <= 256, windows inside the first 4096 terms):")
failure = check_lemma1_exhaustive(256, 4096, PrefixTable.build(4096))
print("  all windows sum to at least the prefix" if failure is None else f"  FAILED at {failure}")
