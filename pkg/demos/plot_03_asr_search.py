"""
A small seeded search
=====================

Sample (f_1 g, f_2 g) generators over one class at a time.  Records
depend only on the seed, never on the thread count.
"""

from qcforge.linalg import min_distance_exact
from qcforge.qc import SearchConfig, asr_search, build_qc_matrix, record_to_spec

cfg = SearchConfig(q=2, m_values=[15], ells=[2], k_min=4, k_max=8, samples=25, seed=7, targets={})
summaries = []
records = list(asr_search(cfg, summaries))
print(summaries)

best = {}
for r in records:
    best[r.k] = max(best.get(r.k, 0), r.d)
print(sorted(best.items()))

# every record rebuilds to the code it describes
r = records[0]
G = build_qc_matrix(record_to_spec(r))
print(r.params, G.rank, int(min_distance_exact(G)))

cfg.threads = 4
print(sorted(x.key() for x in asr_search(cfg)) == sorted(x.key() for x in records))
