# Factor complexity profiles of the built-in words.
#
# Every statistic here is computed from a finite window (a prefix of the
# infinite word) with a suffix automaton, so the numbers are exact for the
# window and stamped with the (window, n_max) range they were verified on.

from factorlang import build_factor_index, parse_word_spec

SPECS = ["tm", "fib", "abk", "pq:f=isqrt,k=p", "ultper:01|10"]

# p(n) side by side for the first few lengths. The Fibonacci word shows the
# Sturmian signature n+1; the Thue-Morse word stays linear but jumps in
# uneven steps; abk bends upward (it is quadratic in the long run).

indexes = {spec: build_factor_index(parse_word_spec(spec), n_max=64)
           for spec in SPECS}

print("n   " + "".join(f"{spec:>16}" for spec in SPECS))
for n in [1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64]:
    row = "".join(f"{indexes[spec].complexity(n):>16}" for spec in SPECS)
    print(f"{n:<4}" + row)

# The accumulative count g(n) = p(1) + ... + p(n) is what the greedy
# decomposition budgets against, so the index keeps it alongside p.

print()
for spec in SPECS:
    index = indexes[spec]
    c, k = index.slope_constants()
    print(f"{spec:<16} g(64) = {index.accumulative(64):>6}   "
          f"slopes: p(n) <= {c}*n, g(n) <= {k}*n")

# An ultimately periodic word is the degenerate case: its complexity stops
# growing, and the index can point at the plateau. Aperiodic words never
# plateau (p(n) >= n+1 always), which is the Morse-Hedlund dichotomy the
# plateau check rests on.

print()
for spec in SPECS:
    n0 = indexes[spec].detect_eventual_periodicity()
    if n0 is None:
        print(f"{spec:<16} no plateau within the window")
    else:
        print(f"{spec:<16} p({n0 + 1}) = p({n0}) = "
              f"{indexes[spec].complexity(n0)}: eventually periodic")

# Special factors explain the growth: p(n+1) - p(n) equals the number of
# extra right-extensions, so counting right special factors per length gives
# the derivative of the profile.

print()
fib = indexes["fib"]
print("fib right special factors, lengths 1..6:")
for n in range(1, 7):
    print(f"  length {n}: {sorted(fib.right_special(n))}")
