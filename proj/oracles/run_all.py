"""Runs every oracle and checks the values frozen into the C++ tests."""

import json
import math
import pathlib
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent

EXPECTED = {
    "two_point.py": {
        "omega1_dimension": 2,
        "omega2_dimension": 2,
        "junk_dimension": 0,
        "R_diagonal": [-1.0, 0.0, 0.0, -1.0],
        "R_offdiagonal_max": 0.0,
        "R_spectral_norm": 1.0,
        "route_difference": 0.0,
        "c1_norm_b2": math.sqrt(2.0),
        "c2_norm_b2": math.sqrt(2.0),
        "pi_D_delta_b2": [[0.0, -1.0], [1.0, 0.0]],
        "b2_commutator": [[0.0, -1.0], [0.0, 0.0]],
        "two_form_b2_delta_b2": [[-1.0, 0.0], [0.0, -1.0]],
        "graded_commutator_JJ": [[-2.0, 0.0], [0.0, -2.0]],
        "spectral_norm_J": 1.0,
    },
    "three_point_junk.py": {
        "omega1_dimension": 4,
        "omega2_dimension": 5,
        "kernel_dimension": 2,
        "junk_dimension": 2,
        "E11_commutator_E22_norm": 0.0,
        "junk_witness_norm": math.sqrt(0.5),
    },
    "connection.py": {
        "R_diagonal": [1.0, 1.0, 0.25, 0.25],
        "R_spectral_norm": 1.0,
        "correspondence_spectral_norm": 2.088087488839953,
        "decomposition_residual": 0.0,
        "anticommutator_ratio": math.sqrt(0.5),
    },
    "external.py": {
        "graded_defect_norm": 0.0,
        "ungraded_defect_norm": 2.0,
    },
    "small_examples.py": {
        "rank_one_kernel_dimension": 2,
        "dirac_algebra_residual": 1.0,
        "pi_D_sum": [[0.0, -2.0], [1.0, 0.0]],
    },
    "submersion.py": {
        "heisenberg": {"S": [[[0.0, 0.0]]], "k": [0.0, 0.0], "Omega": [[[0.0], [-1.0]], [[1.0], [0.0]]]},
        "hopf_1": {"S": [[[0.0, 0.0]]], "k": [0.0, 0.0], "Omega": [[[0.0], [-2.0]], [[2.0], [0.0]]]},
        "hopf_0.5": {"S": [[[0.0, 0.0]]], "k": [0.0, 0.0], "Omega": [[[0.0], [-1.0]], [[1.0], [0.0]]]},
        "warped_torus_2_1": {"S": [[[0.5]]], "k": [0.5], "Omega": [[[0.0]]]},
    },
}


def close(a, b, tol=1e-12):
    if isinstance(b, dict):
        return all(close(a[k], v, tol) for k, v in b.items())
    if isinstance(b, list):
        return len(a) == len(b) and all(close(x, y, tol) for x, y in zip(a, b))
    return abs(a - b) <= tol * max(1.0, abs(b))


failed = 0
for script, expected in EXPECTED.items():
    out = subprocess.run([sys.executable, str(HERE / script)], check=True, capture_output=True, text=True, cwd=HERE)
    values = json.loads(out.stdout)
    for key, want in expected.items():
        ok = close(values[key], want)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {script} {key}")
sys.exit(1 if failed else 0)
