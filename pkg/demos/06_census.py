"""A small isomorph-free census with a checkpoint.

Run with ``python3 demos/06_census.py``.
"""
import os
import tempfile

from mnfcomplex import CensusConfig, census_codim2, enumerate_census, resume

# Unsuspended homology spheres on at most 6 vertices with at most 6 non-faces.
cfg = CensusConfig(n_max=6, m_max=6, mode="spheres", require_unsuspended=True)
found = []
summary = enumerate_census(cfg, found.append)
print(summary.as_dict())
for r in found:
    print(r.to_json())

# A run can stop after a few tasks and pick up later from its checkpoint.
path = os.path.join(tempfile.mkdtemp(), "census.ckpt")
big = CensusConfig(n_max=6, m_max=6, mode="spheres", checkpoint_path=path)
first = enumerate_census(big, stop_after_tasks=3)
print("complete after the first call?", first.complete)
records = []
done = resume(path, big, records.append)
print("complete after resuming?", done.complete, "|", len(records), "records")

# Codimension two: every class is a join of simplex boundaries.
report = census_codim2(6)
for r in report.records:
    print(r.mnf, "simplex boundary sizes", report.decompositions[r.key])
print("all simplex joins:", report.all_simplex_joins, "| any unsuspended:", report.any_unsuspended)
