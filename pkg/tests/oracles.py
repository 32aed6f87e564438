"""Independent brute-force reference implementations used as test oracles.

Everything here is deliberately written with plain loops over Python lists,
separate from the library code paths it checks.
"""


def jaro_oracle(s1, s2):
    if s1 == s2:
        return 1.0
    if not s1 or not s2:
        return 0.0
    window = max(len(s1), len(s2)) // 2 - 1
    if window < 0:
        window = 0
    used = set()
    matches1 = []
    for i in range(len(s1)):
        for j in range(len(s2)):
            if j in used:
                continue
            if abs(i - j) > window:
                continue
            if s1[i] == s2[j]:
                used.add(j)
                matches1.append((i, j))
                break
    if not matches1:
        return 0.0
    m = len(matches1)
    seq1 = [s1[i] for i, _ in matches1]
    seq2 = [s2[j] for j in sorted(j for _, j in matches1)]
    half_transpositions = 0
    for a, b in zip(seq1, seq2):
        if a != b:
            half_transpositions += 1
    t = half_transpositions / 2
    return (m / len(s1) + m / len(s2) + (m - t) / m) / 3


def jaro_winkler_oracle(s1, s2, p=0.1, max_prefix=4):
    j = jaro_oracle(s1, s2)
    prefix = 0
    while (
        prefix < max_prefix
        and prefix < len(s1)
        and prefix < len(s2)
        and s1[prefix] == s2[prefix]
    ):
        prefix += 1
    return j + prefix * p * (1 - j)


# ---------------------------------------------------------------------------
# Matrix metric oracles; M is a plain list of lists (rows = sentences).


def freq_oracle(M, x):
    return sum(M[x - 1])


def interaction_oracle(M, x):
    m = len(M)
    n = len(M[0]) if m else 0
    total = 0
    for y in range(n):
        if M[x - 1][y] != 0:
            for z in range(m):
                if z != x - 1:
                    total += M[z][y]
    return total


def hamming_pair_oracle(M, i, j):
    """h(i, j) with 1-based term indices."""
    count = 0
    for row in M:
        if row[i - 1] != row[j - 1]:
            count += 1
    return count


def hamming_weight_oracle(M, x):
    n = len(M[0]) if M else 0
    total = 0
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if M[x - 1][i - 1] != 0 and M[x - 1][j - 1] != 0:
                total += hamming_pair_oracle(M, i, j)
    return total


# ---------------------------------------------------------------------------
# ROUGE counting oracles.


def _ngram_counts(tokens, n):
    counts = {}
    for i in range(len(tokens) - n + 1):
        gram = tuple(tokens[i:i + n])
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def rouge_n_oracle(candidate, references, n):
    ref_counts = {}
    total = 0
    for ref in references:
        for gram, c in _ngram_counts(ref, n).items():
            ref_counts[gram] = ref_counts.get(gram, 0) + c
            total += c
    if total == 0:
        return 0.0
    cand_counts = _ngram_counts(candidate, n)
    matched = 0
    for gram, c in ref_counts.items():
        matched += min(c, cand_counts.get(gram, 0))
    return matched / total


def _su4_unit_counts(tokens, max_gap=4):
    counts = {}
    for i in range(len(tokens)):
        counts[(tokens[i],)] = counts.get((tokens[i],), 0) + 1
        for j in range(i + 1, len(tokens)):
            if j - i > max_gap:
                break
            pair = (tokens[i], tokens[j])
            counts[pair] = counts.get(pair, 0) + 1
    return counts


def rouge_su4_oracle(candidate, references):
    ref_counts = {}
    total = 0
    for ref in references:
        for unit, c in _su4_unit_counts(ref).items():
            ref_counts[unit] = ref_counts.get(unit, 0) + c
            total += c
    if total == 0:
        return 0.0
    cand_counts = _su4_unit_counts(candidate)
    matched = 0
    for unit, c in ref_counts.items():
        matched += min(c, cand_counts.get(unit, 0))
    return matched / total


# ---------------------------------------------------------------------------
# Naive Bayes log-posterior oracle over trigram counts.


def bayes_posterior_oracle(chemical_words, other_words, alpha, word):
    """Log posteriors (chemical, non-chemical) computed from first principles."""
    import math

    def trigrams(w):
        padded = "^" + w.lower() + "$"
        return [padded[i:i + 3] for i in range(len(padded) - 2)]

    chem_counts = {}
    other_counts = {}
    for w in chemical_words:
        for g in trigrams(w):
            chem_counts[g] = chem_counts.get(g, 0) + 1
    for w in other_words:
        for g in trigrams(w):
            other_counts[g] = other_counts.get(g, 0) + 1
    vocab = set(chem_counts) | set(other_counts)
    v = len(vocab)
    total = len(chemical_words) + len(other_words)

    scores = []
    for counts, size in ((chem_counts, len(chemical_words)),
                         (other_counts, len(other_words))):
        class_total = sum(counts.values())
        denom = class_total + alpha * (v + 1)
        score = math.log(size / total)
        for g in trigrams(word):
            if g in vocab:
                score += math.log((counts.get(g, 0) + alpha) / denom)
            else:
                score += math.log(alpha / denom)
        scores.append(score)
    return scores[0], scores[1]
