#!/usr/bin/env python3
# Copyright 2026 The bellmax Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes XY-chain correlator fixtures by exact diagonalization.

H = -sum_i [(1+g)/2 X_i X_{i+1} + (1-g)/2 Y_i Y_{i+1} + h Z_i] on a periodic
ring. Correlators are taken in the equal mixture of the (near-)degenerate
ground states, which keeps every row a valid reduced state.

Usage: gen_xy_fixture.py OUT_DIR [--sites N]
"""

import argparse
import pathlib

import numpy as np

X = np.array([[0.0, 1.0], [1.0, 0.0]])
Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
Z = np.diag([1.0, -1.0])
PAULI = {"x": X, "y": Y, "z": Z}


def site_op(n, ops):
    m = np.array([[1.0 + 0.0j]])
    for k in range(n):
        m = np.kron(m, ops.get(k, np.eye(2)))
    return m


def ground_projector(n, g, h):
    dim = 2**n
    ham = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        j = (i + 1) % n
        ham -= (1 + g) / 2 * site_op(n, {i: X, j: X})
        ham -= (1 - g) / 2 * site_op(n, {i: Y, j: Y})
        ham -= h * site_op(n, {i: Z})
    w, v = np.linalg.eigh(ham)
    ground = v[:, w < w[0] + 1e-8]
    return ground @ ground.conj().T / ground.shape[1]


def corr(rho, n, ops):
    return float(np.trace(rho @ site_op(n, ops)).real)


def fmt(v):
    v = 0.0 if abs(v) < 1e-13 else v
    return f"{v:.9g}"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("out_dir", type=pathlib.Path)
    parser.add_argument("--sites", type=int, default=10)
    args = parser.parse_args()
    n = args.sites
    two = ["site_config,T_xx,T_yy,T_zz,T_xy"]
    three = ["site_config,T_zzz,T_zxx,T_xzx,T_xxz"]
    for g in (0.0, 0.25, 0.5, 0.75, 1.0):
        for h in (0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5):
            rho = ground_projector(n, g, h)
            label = f"g{g:.2f}_h{h:.2f}"
            for r in (1, 2, 3):
                t = [corr(rho, n, {0: PAULI[u], r: PAULI[u]}) for u in "xyz"]
                txy = corr(rho, n, {0: X, r: Y})
                two.append(",".join([f"{label}_R{r}"] + [fmt(v) for v in t + [txy]]))
            for a, b in ((1, 1), (1, 2), (2, 1)):
                sites = (0, a, a + b)
                vals = []
                for word in ("zzz", "zxx", "xzx", "xxz"):
                    vals.append(corr(rho, n, {s: PAULI[c] for s, c in zip(sites, word)}))
                three.append(",".join([f"{label}_a{a}_b{b}"] + [fmt(v) for v in vals]))
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "xy_chain_2site.csv").write_text("\n".join(two) + "\n")
    (args.out_dir / "xy_chain_3site.csv").write_text("\n".join(three) + "\n")


if __name__ == "__main__":
    main()
