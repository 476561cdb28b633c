# The Sturmian route: two-word-per-length sets from special factors.
#
# A Sturmian word has exactly one right special and one left special factor
# per length. S1 collects the one-letter right extensions of the right
# special factors, S2 the one-letter left extensions of the left special
# ones; together with the short factors that is already enough to write any
# factor as a product of one word from each set.

from factorlang import (
    PreconditionError,
    VerificationError,
    build_factor_index,
    parse_word_spec,
    sturmian_split_sets,
    verify_cover,
    witness_split,
)

index = build_factor_index(parse_word_spec("fib"), n_max=64)
s1, s2 = sturmian_split_sets(index)

print("fib, n_max 64:")
for n in [1, 2, 5, 21, 64]:
    print(f"  length {n}: |S1| = {s1.cardinality(n)}, |S2| = {s2.cardinality(n)}")
print(f"  S1 at length 2: {sorted(w for w in s1.words() if len(w) == 2)}")

report = verify_cover(index, s1, s2)
print(f"  coverage: {report.coverage:.6f} over {report.total} factors")

# witness_split finds the leftmost cut certifying membership in S1 * S2.
v = index.source.prefix(40)[7:29]
rec = witness_split(v, s1, s2)
print(f"  {rec.v!r} = {rec.s!r} + {rec.t!r}")

# The construction checks the Sturmian signature before trusting it, so a
# word with the wrong complexity is rejected instead of silently producing
# sets that cannot work.
try:
    sturmian_split_sets(build_factor_index(parse_word_spec("tm"), n_max=32))
except (PreconditionError, VerificationError) as exc:
    print(f"\ntm rejected: {exc}")

# Any directive sequence gives another Sturmian word; the sets are just as
# thin even though the word itself looks quite different.
other = build_factor_index(parse_word_spec("sturm:2,(1)"), n_max=32)
o1, o2 = sturmian_split_sets(other)
print(f"\nsturm:2,(1) prefix: {other.source.prefix(20)}")
print(f"coverage: {verify_cover(other, o1, o2).coverage:.6f}")
