"""Independent brute-force references used by the tests."""


def naive_suffix_array(text: bytes) -> list[int]:
    return [i + 1 for i in sorted(range(len(text)), key=lambda i: text[i:])]


def naive_occurrences(text: bytes, pattern: bytes) -> list[int]:
    return [i + 1 for i in range(len(text) - len(pattern) + 1)
            if text[i:i + len(pattern)] == pattern]


def naive_repair(seq, n_terminals):
    """Re-Pair that recounts every pair from scratch after each replacement."""
    seq = list(seq)
    rules = []

    def rank(v):
        return 0 if v <= n_terminals else v - n_terminals

    while True:
        counts, last = {}, {}
        for i in range(len(seq) - 1):
            p = (seq[i], seq[i + 1])
            if p[0] == p[1] and last.get(p) == i - 1:
                continue
            last[p] = i
            counts[p] = counts.get(p, 0) + 1
        best = min(((-c, rank(p[0]) + rank(p[1]), p) for p, c in counts.items() if c >= 2),
                   default=None)
        if best is None:
            return rules, seq
        pair = best[2]
        new = n_terminals + 1 + len(rules)
        rules.append(pair)
        out, i = [], 0
        while i < len(seq):
            if i + 1 < len(seq) and (seq[i], seq[i + 1]) == pair:
                out.append(new)
                i += 2
            else:
                out.append(seq[i])
                i += 1
        seq = out


def naive_complete_heights(top_level, height):
    """Simulate minimal-height, leftmost merging on a list of heights only."""
    hs = [height(v) for v in top_level]
    while len(hs) > 1:
        merged = [1 + max(hs[i], hs[i + 1]) for i in range(len(hs) - 1)]
        i = merged.index(min(merged))
        hs[i:i + 2] = [merged[i]]
    return hs[0]
