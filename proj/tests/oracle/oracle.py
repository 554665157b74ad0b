#!/usr/bin/env python3
# Copyright 2026 The wordlab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force reference values for the test fixtures.

Everything here works straight from the definitions (naive substring
counting, explicit border enumeration) and shares no code with the C++
library. Run it to regenerate tests/fixtures/oracle_values.hpp.
"""

import argparse
import sys


def fixed_point(images, seed, length):
    w = seed
    while len(w) < length:
        w = "".join(images[c] for c in w)
    return w[:length]


def paperfolding(length):
    out = []
    for n in range(1, length + 1):
        m = n
        while m % 2 == 0:
            m //= 2
        out.append("1" if m % 4 == 1 else "0")
    return "".join(out)


PRESETS = {
    "thue-morse": lambda L: fixed_point({"a": "ab", "b": "ba"}, "a", L),
    "fibonacci": lambda L: fixed_point({"a": "ab", "b": "a"}, "a", L),
    "cantor": lambda L: fixed_point({"a": "aba", "b": "bbb"}, "a", L),
    "period-doubling": lambda L: fixed_point({"a": "ab", "b": "aa"}, "a", L),
    "paperfolding": paperfolding,
    "tribonacci": lambda L: fixed_point({"a": "ab", "b": "ac", "c": "a"}, "a", L),
}


def count_occ(pattern, text):
    return sum(1 for i in range(len(text) - len(pattern) + 1)
               if text[i:i + len(pattern)] == pattern)


def closed_brute(w):
    """(closed, longest border occurring exactly twice) per the definition."""
    if len(w) == 1:
        return True, 0
    for b in range(len(w) - 1, 0, -1):
        if w[:b] == w[-b:] and count_occ(w[:b], w) == 2:
            return True, b
    return False, None


def factors(x, n):
    return sorted({x[i:i + n] for i in range(len(x) - n + 1)})


def counts(x, n):
    fs = factors(x, n)
    cl = sum(1 for f in fs if closed_brute(f)[0])
    return len(fs), len(fs) - cl, cl


def return_words(x, v):
    pos = [i for i in range(len(x) - len(v) + 1) if x[i:i + len(v)] == v]
    return {x[a:b] for a, b in zip(pos, pos[1:])}


def check_examples():
    tm = PRESETS["thue-morse"](64)
    fib = PRESETS["fibonacci"](4000)
    assert fixed_point({"a": "ab", "b": "ba"}, "a", 8) == "abbabaab"
    assert fixed_point({"a": "aba", "b": "bbb"}, "a", 9) == "ababbbaba"
    assert paperfolding(8) == "11011001"
    assert PRESETS["fibonacci"](8) == "abaababa"
    assert tm[:16] == "abbabaabbaababba"
    assert closed_brute("abaaaab") == (True, 2)
    assert not closed_brute("aabab")[0] and not closed_brute("aabaaa")[0]
    assert closed_brute("aa") == (True, 1)
    assert factors(fib, 3) == ["aab", "aba", "baa", "bab"]
    assert counts(PRESETS["thue-morse"](4000), 2) == (4, 2, 2)
    assert counts(fib, 2) == (3, 2, 1)
    assert return_words(fib, "a") == {"a", "ab"}
    assert return_words(fib, "b") == {"baa", "ba"}
    pos = [i for i, c in enumerate("abaababaab") if c == "b"]
    assert pos == [1, 4, 6, 9]


def fib_return_prefixes(max_len):
    """Smallest L such that every factor v of length m shows both of its
    return words inside the first L symbols."""
    big = PRESETS["fibonacci"](20000)
    out = {}
    for m in range(1, max_len + 1):
        need = 0
        for v in factors(big, m):
            assert len(return_words(big, v)) == 2, v
            pos = [i for i in range(len(big) - m + 1) if big[i:i + m] == v]
            seen = set()
            for a, b in zip(pos, pos[1:]):
                seen.add(big[a:b])
                if len(seen) == 2:
                    # returns witnessed by the window ending at b + m
                    need = max(need, b + m)
                    break
        out[m] = need
    return out


def max_gap(x, v):
    pos = [i for i in range(len(x) - len(v) + 1) if x[i:i + len(v)] == v]
    return max(b - a for a, b in zip(pos, pos[1:]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=None)
    ap.add_argument("--pf-max", type=int, default=512)
    args = ap.parse_args()

    check_examples()

    cantor = PRESETS["cantor"](3 ** 8)
    cantor_cl = {n: counts(cantor, n)[2] for n in (8, 22, 64)}
    assert all(counts(PRESETS["cantor"](3 ** 9), n)[2] == c
               for n, c in cantor_cl.items())

    fib = PRESETS["fibonacci"](20000)
    assert all(len(factors(fib, n)) == n + 1 for n in range(1, 31))
    fib_ret = fib_return_prefixes(15)

    tm = PRESETS["thue-morse"](1 << 13)
    tm_rows = {n: counts(tm, n) for n in range(1, 61)}
    t_op = min(tm_rows[n][1] for n in range(10, 41))
    prog_max = {}
    for d in range(1, 5):
        for r in range(d):
            prog_max[(d, r)] = max(tm_rows[n][2] for n in range(1, 61)
                                   if n % d == r)
    t_cl = min(prog_max.values())
    tm_max_cl_40 = max(tm_rows[n][2] for n in range(1, 41))
    tm_gap_aa = max_gap(tm, "aa")

    pf = paperfolding(64 * args.pf_max)
    pf_zero = 0
    for n in range(1, args.pf_max + 1):
        if counts(pf, n)[2] == 0:
            pf_zero = n
            break

    lines = [
        "// Generated by tests/oracle/oracle.py. Do not edit by hand.",
        "#pragma once",
        "",
        "#include <array>",
        "#include <cstddef>",
        "",
        "namespace wordlab::fixtures {",
        "",
    ]
    for n, c in cantor_cl.items():
        lines.append(f"inline constexpr std::size_t kCantorClosedAt{n} = {c};")
    lines.append("")
    lines.append("// Prefix length needed to witness both return words of every")
    lines.append("// Fibonacci factor of length m (index m, entry 0 unused).")
    vals = ", ".join(str(fib_ret[m]) for m in range(1, 16))
    lines.append(f"inline constexpr std::array<std::size_t, 16> kFibonacciReturnPrefix = {{0, {vals}}};")
    lines.append(f"inline constexpr std::size_t kFibonacciReturnPrefixMax = {max(fib_ret.values())};")
    lines.append("")
    lines.append(f"inline constexpr std::size_t kThueMorseOpenThreshold = {t_op};   // min op(n), 10 <= n <= 40")
    lines.append(f"inline constexpr std::size_t kThueMorseClosedThreshold = {t_cl}; // min over d<=4 of max cl(n), n <= 60")
    lines.append(f"inline constexpr std::size_t kThueMorseMaxClosedTo40 = {tm_max_cl_40};")
    lines.append(f"inline constexpr std::size_t kThueMorseMaxGapAA = {tm_gap_aa};")
    ops = ", ".join(str(tm_rows[n][1]) for n in range(1, 61))
    cls = ", ".join(str(tm_rows[n][2]) for n in range(1, 61))
    lines.append(f"inline constexpr std::array<std::size_t, 60> kThueMorseOpen = {{{ops}}};")
    lines.append(f"inline constexpr std::array<std::size_t, 60> kThueMorseClosed = {{{cls}}};")
    lines.append("")
    lines.append(f"// Smallest n <= {args.pf_max} with cl(n) = 0 for the paperfolding word; 0 if none.")
    lines.append(f"inline constexpr std::size_t kPaperfoldingFirstClosedZero = {pf_zero};")
    lines.append("")
    lines.append("}  // namespace wordlab::fixtures")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
