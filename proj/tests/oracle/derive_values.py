# Copyright 2026 The zecap Authors
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

"""Independent numpy oracle for the values frozen in tests/oracle_values.hpp.

Brute force throughout: full isometries, explicit partial traces, no A operator.
"""

import itertools

import numpy as np


def omega(d):
    return np.exp(2j * np.pi / d)


def clock(d, p=1):
    return np.diag([omega(d) ** (p * k) for k in range(d)])


def shift(d):
    return np.roll(np.eye(d), 1, axis=0)


def fourier(d):
    w = omega(d)
    return np.array([[w ** (j * k) for k in range(d)] for j in range(d)]) / np.sqrt(d)


def phase_gate(d):
    if d == 2:
        return np.diag([1, 1j])
    return np.diag([omega(d) ** (j * (j - 1) // 2) for j in range(d)])


def canon(u):
    flat = u.flatten()
    k = next(i for i, x in enumerate(flat) if abs(x) > 1e-8)
    return u * (abs(flat[k]) / flat[k])


def key(u):
    return tuple(np.round(np.concatenate([u.real.flatten(), u.imag.flatten()]), 8) + 0.0)


def clifford(d):
    gens = [fourier(d), phase_gate(d), shift(d), clock(d)]
    seen = {key(canon(np.eye(d, dtype=complex))): canon(np.eye(d, dtype=complex))}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = canon(u @ g)
                k = key(v)
                if k not in seen:
                    seen[k] = v
                    nxt.append(v)
        frontier = nxt
    return list(seen.values())


def frame_potential(fam):
    m = len(fam)
    return sum(abs(np.trace(a.conj().T @ b)) ** 4 for a in fam for b in fam) / m**2


def phi_proj(d):
    v = np.eye(d).flatten() / np.sqrt(d)
    return np.outer(v, v.conj())


def ptrace(rho, dims, keep):
    n = len(dims)
    t = rho.reshape(dims + dims)
    idx = list(range(2 * n))
    for k in sorted(set(range(n)) - set(keep), reverse=True):
        t = np.trace(t, axis1=k, axis2=k + t.ndim // 2)
    kd = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(kd, kd)


def block_state(d, n, a, b, c):
    """Deterministic BlockStateVector, flattened on A1^n A2^n; normalized."""
    m = d**n
    v = np.zeros(m * m, dtype=complex)
    for t in range(m):
        for s in range(m):
            v[t * m + s] = np.cos(a + b * t + c * s) + 1j * np.sin(c * t - a * s + b)
    return v / np.linalg.norm(v)


def branch_overlap(d, n, fam, psi1, psi2):
    """m^n * sum_j w_j^2 tr(rho_j sigma_j) with rho_j = tr_{A2^n} of the isometric image."""
    m = len(fam)
    pg = sum(np.kron(np.outer(np.eye(d)[i], np.eye(d)[i]), clock(d, i)) for i in range(d))
    total = 0.0
    for js in itertools.product(range(m), repeat=n):
        # per use: P (I (x) g); reorder to (A1_1, A2_1, A1_2, A2_2, ...)
        u = np.eye(1)
        for j in js:
            u = np.kron(u, pg @ np.kron(np.eye(d), fam[j]))
        perm = [t for t in range(n)] + [n + t for t in range(n)]
        inter = [x for t in range(n) for x in (t, n + t)]
        outs = []
        for psi in (psi1, psi2):
            t = psi.reshape([d] * (2 * n)).transpose(inter).reshape(-1)
            out = u @ t
            rho = np.outer(out, out.conj())
            outs.append(ptrace(rho, [d] * (2 * n), [2 * t for t in range(n)]))
        total += np.trace(outs[0] @ outs[1]).real / m ** (2 * n)
    return total * m**n


def main():
    np.set_printoptions(precision=17)
    for d in (2, 3):
        fam = clifford(d)
        print(f"d={d} clifford size {len(fam)} frame potential {frame_potential(fam):.15f}")
        phi = phi_proj(d)
        rest = np.eye(d * d) - phi
        amat = np.full((d, d), -1.0 / (d * d - 1)) + np.eye(d) * (1 + 1.0 / (d * d - 1))
        a_op = np.kron(amat, rest) + np.kron(np.ones((d, d)), phi)
        ev = np.linalg.eigvalsh(a_op - np.kron(np.eye(d), rest))
        print(f"d={d} min eig A - I(x)(I-Phi) = {ev.min():.17g}")
        print(f"d={d} min eig of a-matrix = {np.linalg.eigvalsh(amat).min():.17g}")
        print(f"d={d} rank A = {np.linalg.matrix_rank(a_op, tol=1e-9)}")
        pt = phi.reshape(d, d, d, d).transpose(2, 1, 0, 3).reshape(d * d, d * d)
        print(f"d={d} Phi^Gamma eigenvalues {np.round(np.linalg.eigvalsh(pt), 15)}")
        # noncommutative graph
        prods = []
        for g in fam:
            for k in range(d):
                for l in range(d):
                    e = np.outer(np.eye(d)[l], np.eye(d)[k])
                    prods.append(np.kron(clock(d, k - l), g.conj().T @ e @ g).flatten())
        print(f"d={d} dim G = {np.linalg.matrix_rank(np.array(prods), tol=1e-9)}")
        zi = np.kron(clock(d), np.eye(d)).flatten()
        basis = np.array(prods).T
        res = zi - basis @ np.linalg.lstsq(basis, zi, rcond=None)[0]
        print(f"d={d} Z(x)I residual {np.linalg.norm(res):.6f}")
        for n in ((1, 2) if d == 2 else (1,)):
            p1 = block_state(d, n, 0.3, 0.7, 1.1)
            p2 = block_state(d, n, -0.4, 0.2, 0.9)
            print(f"d={d} n={n} branch overlap fixed pair = {branch_overlap(d, n, fam, p1, p2):.17g}")
            print(f"d={d} n={n} branch overlap self = {branch_overlap(d, n, fam, p1, p1):.17g}")
    # P (I (x) F)|00>, trace out A2
    d = 2
    pg = np.diag([1, 1, 1, -1])
    out = pg @ np.kron(np.eye(2), fourier(2)) @ np.eye(4)[0]
    print("tr_2 P(I(x)F)|00> =", ptrace(np.outer(out, out.conj()), [2, 2], [0]).round(15).tolist())


if __name__ == "__main__":
    main()
