"""Text serialization for tables and sequences.

Formats: TSV (optional letter header line, then name-prefixed rows),
CSV (row_name first column) and OEIS-style b-files ("index value" lines,
1-indexed) for single rows.
"""


def _named_rows(table):
    """(header bytes or None, list of (name, row)) for either table type."""
    header = getattr(table, "header", None)
    if hasattr(table, "rows") and isinstance(table.rows, dict):
        pairs = [(name, table.rows[name]) for name in table.row_names]
    else:
        pairs = list(zip(table.row_names, table.rows))
    return header, pairs


def table_to_tsv(table):
    """Tab-separated table: letter header line (if any), then name + values."""
    header, pairs = _named_rows(table)
    lines = []
    if header is not None:
        lines.append("\t".join([""] + [str(c) for c in header]))
    for name, row in pairs:
        lines.append("\t".join([name] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def table_to_csv(table):
    """CSV with a row_name first column; header letters get row_name 'header'."""
    header, pairs = _named_rows(table)
    lines = []
    if header is not None:
        lines.append(",".join(["header"] + [str(c) for c in header]))
    for name, row in pairs:
        lines.append(",".join([name] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def row_to_bfile(row):
    """OEIS b-file body: 'i v_i' per line, 1-indexed, trailing newline."""
    return "".join(f"{i} {v}\n" for i, v in enumerate(row, start=1))


def word_to_text(word):
    """Letters as contiguous digit/letter characters (hex above 9)."""
    return "".join(format(c, "x") for c in word)
