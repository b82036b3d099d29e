"""Independent derivation of the frozen expected values used by the unit tests.

Everything here is computed by brute force (enumeration of selected sets,
candidate-point scans for l1 minimizers, direct distance evaluation) without
sharing code with the C++ implementation. Run with plain python3.
"""

from itertools import combinations
from statistics import stdev


def l1_min(values, weights):
    """Minimum of sum w|z - t| by scanning every breakpoint and midpoint."""
    zs = sorted(set(values))
    cands = zs + [(a + b) / 2 for a, b in zip(zs, zs[1:])]
    best = min(cands, key=lambda t: sum(w * abs(z - t) for z, w in zip(values, weights)))
    return best, sum(w * abs(z - best) for z, w in zip(values, weights))


def mean(v):
    return sum(v) / len(v)


def l2_objective(pos, neg, tp, tn):
    jp = sum(sum((x - t) ** 2 for x, t in zip(s, tp)) for s in pos) / len(pos)
    jn = sum(sum((x - t) ** 2 for x, t in zip(s, tn)) for s in neg) / len(neg)
    return jp + jn


def l1_objective(pos, neg, tp, tn):
    jp = sum(sum(abs(x - t) for x, t in zip(s, tp)) for s in pos) / len(pos)
    jn = sum(sum(abs(x - t) for x, t in zip(s, tn)) for s in neg) / len(neg)
    return jp + jn


def l2_brute(pos, neg, k):
    m = len(pos[0])
    cp = [mean([s[i] for s in pos]) for i in range(m)]
    cn = [mean([s[i] for s in neg]) for i in range(m)]
    out = {}
    for D in combinations(range(m), k):
        tp = [cp[i] if i in D else (cp[i] + cn[i]) / 2 for i in range(m)]
        tn = [cn[i] if i in D else (cp[i] + cn[i]) / 2 for i in range(m)]
        out[D] = (l2_objective(pos, neg, tp, tn), tp, tn)
    return out


def l1_brute(pos, neg, k):
    m = len(pos[0])
    wp, wn = 1 / len(pos), 1 / len(neg)
    out = {}
    for D in combinations(range(m), k):
        tp, tn = [], []
        for i in range(m):
            if i in D:
                tp.append(l1_min([s[i] for s in pos], [1] * len(pos))[0])
                tn.append(l1_min([s[i] for s in neg], [1] * len(neg))[0])
            else:
                t = l1_min([s[i] for s in pos + neg], [wp] * len(pos) + [wn] * len(neg))[0]
                tp.append(t)
                tn.append(t)
        out[D] = (l1_objective(pos, neg, tp, tn), tp, tn)
    return out


pos4 = [(1, 0), (3, 0)]
neg4 = [(0, 2), (0, 4)]
print("worked l2 example, per-set objectives for k=1:")
for D, (j, tp, tn) in l2_brute(pos4, neg4, 1).items():
    print("  D =", D, "objective =", j, "theta_pos =", tp, "theta_neg =", tn)
print("  k=0:", l2_brute(pos4, neg4, 0))
print("  k=2 (plain centroids):", l2_brute(pos4, neg4, 2))

tp, tn = (1, 0), (1, 3)
x = (0, 0)
d2 = sum((a - b) ** 2 for a, b in zip(x, tn)) - sum((a - b) ** 2 for a, b in zip(x, tp))
print("Delta2 at x=(0,0) for theta_pos=(1,0), theta_neg=(1,3):", d2)

print("median {3,3,7,7}:", l1_min([3, 3, 7, 7], [1] * 4))
print("weighted median z=[1,2,3,4] w=[1,1,1,10]:", l1_min([1, 2, 3, 4], [1, 1, 1, 10]))

pos_v, neg_v = [0, 0], [10, 10]
dp = l1_min(pos_v, [1, 1])[1] / 2
dn = l1_min(neg_v, [1, 1])[1] / 2
mu, d = l1_min(pos_v + neg_v, [0.5] * 4)
print("dispersion example: d_pos", dp, "d_neg", dn, "pooled median", mu, "d_all", d, "e", dp + dn - d)

posAB = [(0, 1), (0, 1)]
negAB = [(10, 1), (10, 1)]
print("l1 A/B example, k=1:")
for D, (j, tp, tn) in l1_brute(posAB, negAB, 1).items():
    print("  D =", D, "objective =", j, "theta_pos =", tp, "theta_neg =", tn)

print("objective_l1 pos{0,2} neg{5} theta 1/5:", l1_objective([(0,), (2,)], [(5,)], (1,), (5,)))
print("sample sd of [0,2,4]:", stdev([0, 2, 4]))

# Path decrement example on a 3-feature l1 instance: J(k) - J(k+1) == -e.
pos3 = [(0, 1, 5), (1, 3, 5), (2, 2, 6)]
neg3 = [(4, 1, 5), (6, 2, 9), (5, 0, 5), (7, 1, 6)]
print("l1 3-feature instance, optimal objective per k:")
for k in range(4):
    print("  k =", k, min(v[0] for v in l1_brute(pos3, neg3, k).values()))
print("l2 3-feature instance, optimal objective per k:")
for k in range(4):
    print("  k =", k, min(v[0] for v in l2_brute(pos3, neg3, k).values()))

# fraction 0.5 stratified split on 3 positives / 1 negative:
# floor(0.5 * 3 + 0.5) = 2 positives, floor(0.5 * 1 + 0.5) = 1 negative.
print("stratified counts for 3/1 at 0.5:", int(0.5 * 3 + 0.5), int(0.5 * 1 + 0.5))
