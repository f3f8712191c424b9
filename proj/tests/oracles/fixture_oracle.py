#!/usr/bin/env python3
"""Reference construction for fixture files, written independently of the C++
builder. Prints the expected graph files and the stats row so they can be
committed next to a fixture and compared byte for byte by the test suite.

usage: fixture_oracle.py FIXTURE CUTOFF OUTDIR
"""
import itertools
import re
import sys
from collections import Counter
from pathlib import Path

STOPWORDS = set("""
a about above after again against ain all am an and any are aren as at be
because been before being below between both but by can couldn d did didn do
does doesn doing don down during each few for from further had hadn has hasn
have haven having he her here hers herself him himself his how i if in into
is isn it its itself just ll m ma me mightn more most mustn my myself needn no
nor not now o of off on once only or other our ours ourselves out over own re
s same shan she should shouldn so some such t than that the their theirs them
themselves then there these they this those through to too under until up ve
very was wasn we were weren what when where which while who whom why will with
won wouldn y you your yours yourself yourselves
""".split())

WORD = re.compile(rb"[A-Za-z0-9\x80-\xff]+")


def tokens(title):
    out = []
    for m in WORD.finditer(title.encode("utf-8")):
        tok = m.group().decode("utf-8").translate(
            str.maketrans("ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz"))
        if len(tok) >= 3 and tok not in STOPWORDS and tok not in out:
            out.append(tok)
    return out


def parse_date(s):
    parts = [int(p) for p in s.split("-")]
    while len(parts) < 3:
        parts.append(1)
    return tuple(parts)


def read_fixture(path):
    papers = []
    for line in Path(path).read_text(encoding="utf-8").split("\n"):
        if not line.strip() or line.startswith("#"):
            continue
        date, authors, title = line.split("\t")
        names = []
        for a in authors.split(";"):
            a = a.strip()
            if a and a not in names:
                names.append(a)
        papers.append((parse_date(date), tuple(names), tuple(tokens(title))))
    return sorted(papers)


def top5(counter):
    ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    return sorted(k for k, _ in ranked[:5])


def build(papers, cutoff):
    ids = {}
    for _, names, _ in papers:
        for n in names:
            ids.setdefault(n, len(ids))
    public, ongoing = [], []
    for date, names, toks in papers:
        (public if date < cutoff else ongoing).append(([ids[n] for n in names], set(toks)))

    E = set()
    for authors, _ in public:
        E |= {tuple(sorted(p)) for p in itertools.combinations(authors, 2)}
    priv = {}
    for authors, _ in ongoing:
        fresh = {tuple(sorted(p)) for p in itertools.combinations(authors, 2)} - E
        for a in authors:
            if fresh:
                priv.setdefault(a, set()).update(fresh)

    A = {}
    for v in range(len(ids)):
        c = Counter(t for authors, toks in public if v in authors for t in toks)
        if c:
            A[v] = top5(c)
    Au = {}
    for u, edges in priv.items():
        for v in {x for e in edges for x in e}:
            c = Counter(t for authors, toks in ongoing if u in authors and v in authors for t in toks)
            if c:
                Au[(u, v)] = top5(c)
    return ids, E, priv, A, Au


def delta(ids, priv, A, Au):
    if not priv:
        return None
    total = 0.0
    for u, edges in priv.items():
        vs = {x for e in edges for x in e}
        s = 0.0
        for v in vs:
            a, b = set(A.get(v, [])), set(Au.get((u, v), []))
            s += len(a & b) / len(a | b) if a | b else 0.0
        total += s / len(vs)
    return total / len(priv)


def main():
    fixture, cutoff, outdir = sys.argv[1], parse_date(sys.argv[2]), Path(sys.argv[3])
    ids, E, priv, A, Au = build(read_fixture(fixture), cutoff)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "vertices.tsv": [f"{i}\t{n}" for n, i in sorted(ids.items(), key=lambda kv: kv[1])],
        "public-edges.tsv": [f"{u}\t{v}" for u, v in sorted(E)],
        "private-edges.tsv": [f"{o}\t{u}\t{v}" for o in sorted(priv) for u, v in sorted(priv[o])],
        "public-attrs.tsv": [f"{v}\t{k}" for v in sorted(A) for k in A[v]],
        "private-attrs.tsv": [f"{o}\t{v}\t{k}" for (o, v) in sorted(Au) for k in Au[(o, v)]],
    }
    for name, rows in files.items():
        (outdir / name).write_text("".join(r + "\n" for r in rows), encoding="utf-8")
    d = delta(ids, priv, A, Au)
    private_edges = len(set().union(*priv.values())) if priv else 0
    stats = (
        "V\tE\tV_private\tE_private\tdelta\n"
        f"{len(ids)}\t{len(E)}\t{len(priv)}\t{private_edges}\t"
        + ("NA" if d is None else f"{d:.6f}") + "\n"
    )
    (outdir / "stats.tsv").write_text(stats, encoding="utf-8")


if __name__ == "__main__":
    main()
