"""Reproduce the indifference tables: the threshold parameter per grid cell.

Each table answers one question of the form "how bad can X get before a
planner prefers never building TAI", where X is an extinction date (t1), an
immediate misalignment probability (t2), a delayed-lottery parameter
(t3a/t3b/t3c), or a mounting-hazard slope (t4).

Sentinel cells: NO_TAI_PREFERRED marks a negative implied threshold,
TAI_PREFERRED an implied probability above one, NO_SOLUTION a condition with
no root in the admissible domain.
"""

from tai_welfare import RunConfig
from tai_welfare.tables import emit_table, table_spec

config = RunConfig()

for table_id, caption in (
    ("t1", "extinction date T making certain delayed doom acceptable"),
    ("t2", "tolerable probability of immediate misalignment"),
    ("t3c", "doom date T in the (p3=0.3, p4=0.3) lottery"),
    ("t4", "tolerable mounting-hazard slope (log-like curvature and theta=2)"),
):
    print(f"== {table_id}: {caption}")
    print(emit_table(table_spec(table_id, config), config))
