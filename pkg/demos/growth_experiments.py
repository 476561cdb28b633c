# Growth-rate experiments: where the linear regime ends.
#
# The decomposition machinery above works because the words involved have
# linear factor complexity. These experiments measure two families that
# leave that regime, and the counting claims that calibrate how fast.

import math

from factorlang import (
    build_factor_index,
    growth_fit,
    parse_word_spec,
    staircase_pair_count,
    witness_pair_count,
)

# 1. The abk word (erase the first letter of the fixed point of
#    c -> cab, a -> ab, b -> b) has quadratic complexity. A ratio fit of
#    p(n) against n^2 over a decade of lengths shows a stable band.
index = build_factor_index(parse_word_spec("abk"), n_work=10 ** 6, n_max=1000)
fit = growth_fit(index.profile(), "n2", 100, 1000)
print(f"abk p(n)/n^2 on [100, 1000]: ratio in "
      f"[{fit.ratio_min:.4f}, {fit.ratio_max:.4f}], spread {fit.spread:.3f}")

# 2. The staircase words a b^l a b^(l+1) ... a live inside abk, and counting
#    the (k, l) pairs that fit below length n with l >= sqrt(n) grows like
#    n log n. The band of count/(n ln n) stays narrow across three decades.
print("\nstaircase pair counts:")
for n in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
    count = staircase_pair_count(n)
    print(f"  n = {n:>7}: {count:>8}  count/(n ln n) = "
          f"{count / (n * math.log(n)):.4f}")

# 3. The block-product word for f = isqrt, k(p,q) = p interpolates between
#    linear and quadratic: its complexity is O(n^2 sqrt(n)). The fitted
#    window saturates long lengths, so the fit runs over a decade the window
#    fully resolves (an upper-bound claim only needs the ratio to stay
#    finite beyond it).
index = build_factor_index(parse_word_spec("pq:f=isqrt,k=p"),
                           n_work=10 ** 6, n_max=1000)
fit = growth_fit(index.profile(), "n2f:isqrt", 10, 100)
print(f"\npq p(n)/(n^2 isqrt(n)) on [10, 100]: ratio in "
      f"[{fit.ratio_min:.5f}, {fit.ratio_max:.5f}], spread {fit.spread:.3f}")

# 4. A witness count for why that word cannot have linear complexity: the
#    number of usable (p, q) pairs per length grows faster than any line.
print("\nwitness pairs with k = 3:")
for n in (10 ** 3, 10 ** 4, 10 ** 5):
    pairs = witness_pair_count(n, 3)
    print(f"  n = {n:>6}: {pairs:>7}  pairs/n = {pairs / n:.4f}")
