#!/usr/bin/env python3
"""Regenerate src/oeis_data.cpp.

The embedded prefixes are the triangles of m-nomial coefficients read by
rows, i.e. the coefficient lists of (1 + t + ... + t^m)^k for k = 0, 1, ...
flattened row-major.  They are computed here with plain integer convolution
so the table is produced independently of the C++ library it checks.

Sequences: A027907 (m=2), A008287 (m=3), A035343 (m=4).
"""

import sys

ENTRIES = [
    ("A027907", 2, 16),  # rows 0..15 -> 256+ terms
    ("A008287", 3, 13),  # rows 0..12 -> 247 terms
    ("A035343", 4, 11),  # rows 0..10 -> 231 terms
]


def rows(m, count):
    row = [1]
    out = [row[:]]
    for _ in range(count - 1):
        new = [0] * (len(row) + m)
        for i, c in enumerate(row):
            for j in range(m + 1):
                new[i + j] += c
        row = new
        out.append(row[:])
    return out


def main(path):
    with open(path, "w") as f:
        f.write("// Generated by tools/gen_oeis_data.py -- do not edit by hand.\n")
        f.write('#include "polytri/oeis.hpp"\n\n')
        f.write("namespace polytri {\nnamespace {\n\n")
        names = []
        for ident, m, nrows in ENTRIES:
            terms = [t for row in rows(m, nrows) for t in row]
            name = "k" + ident
            names.append((ident, m, nrows, name, len(terms)))
            f.write(f"constexpr long long {name}[] = {{\n")
            line = "   "
            for t in terms:
                piece = f" {t},"
                if len(line) + len(piece) > 78:
                    f.write(line + "\n")
                    line = "   "
                line += piece
            f.write(line.rstrip(",") + "};\n\n")
        f.write("}  // namespace\n\n")
        f.write("const std::vector<OeisEntry>& embedded_oeis_entries() {\n")
        f.write("    static const std::vector<OeisEntry> entries = {\n")
        for ident, m, nrows, name, count in names:
            f.write(f'        {{"{ident}", {m}, {nrows}, '
                    f"std::vector<long long>({name}, {name} + {count})}},\n")
        f.write("    };\n    return entries;\n}\n\n}  // namespace polytri\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/oeis_data.cpp")
