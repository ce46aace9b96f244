# Copyright 2026 The primelab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import math

import pytest

import primelab


@pytest.fixture(scope="module")
def table():
    return primelab.PrimeTable.build(100_000)


def test_prime_table(table):
    assert table.count(100) == 25
    assert len(table) == 9592
    assert 97 in table and 91 not in table
    assert table.primes(10, 30) == [11, 13, 17, 19, 23, 29]
    with pytest.raises(IndexError):
        table.count(200_000)


def test_goldbach(table):
    assert primelab.goldbach_count(table, 50) == 6  # pairs summing to 100
    counts = primelab.goldbach_counts_bulk(table, 1000)
    assert min(counts[2:]) >= 1
    assert primelab.hl_singular_product(64) == 1.0
    assert primelab.hl_singular_product(15) == pytest.approx(2 * 4 / 3)


def test_density_rows():
    err_pnt, err_a = primelab.table5_row(10)
    assert err_pnt == pytest.approx(-4.5623e-2, rel=1e-4)
    assert err_a == pytest.approx(-2.2417e-3, rel=1e-3)
    rows = primelab.table21()
    assert [r[0] for r in rows] == [2, 3, 4, 5, 6, 7]
    assert rows[0][2] == pytest.approx(39.207, abs=1e-3)


def test_zeta():
    assert primelab.eta_zeta(2).real == pytest.approx(math.pi**2 / 6, rel=1e-12)
    z = primelab.eta_zeta(complex(0.5, 14.134725141734693))
    assert abs(z) < 1e-9
    assert abs(primelab.functional_ratio(complex(0.5, 30))) == pytest.approx(1, abs=1e-10)
    with pytest.raises(ValueError):
        primelab.eta_zeta(1)
    zeros = primelab.ZeroTable.load_default()
    assert zeros.count_below(100) == 29
    assert zeros.height(1) == pytest.approx(14.134725, abs=1e-6)


def test_oscillation(table):
    f = primelab.factor_polar(2, complex(0.5, 10))
    w = 1 / (1 - 2 ** complex(-0.5, -10))
    assert f.r == pytest.approx(abs(w), rel=1e-12)
    assert f.phi == pytest.approx(cmath.phase(w), abs=1e-12)
    zeros = primelab.ZeroTable.load_default()
    scan = primelab.localization_scan(table, 13.5, 15.0, 0.01, zeros=zeros)
    flagged = [r for r in scan if r.flagged]
    assert flagged and min(r.nearest_zero_distance for r in flagged) < 0.05


def test_write_table(tmp_path):
    path = primelab.write_table("21", sieve_limit=1000, out=tmp_path, format="json")
    assert path.exists() and path.suffix == ".json"
