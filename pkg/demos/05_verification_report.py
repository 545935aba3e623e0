# %% [markdown]
# # Seeded grid verification and negative controls

# %%
import json

from qhv.catalog import get
from qhv.verify import VerificationConfig, corrupted, emit_report, run_verification

config = VerificationConfig(["thm-c", "thm-h", "ex-thm-e-l2"], n_max=8, ell_max=3,
                            points_per_cell=5, seed=2024)
report = run_verification(config)
print(emit_report(report, "markdown").decode())

# %% [markdown]
# Multiply one closed form by q and the run fails with exact witnesses.

# %%
bad = run_verification(config, descriptors=[corrupted(get("thm-c"))])
print(bad.status, len(bad.witnesses), "witnesses")
print(json.dumps(bad.witnesses[0], indent=2))
