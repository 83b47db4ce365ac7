"""Text serialization of tables, rows and words."""

from splythoff.sequences import splythoff_columns, wythoff_columns
from splythoff.serialize import (
    row_to_bfile,
    table_to_csv,
    table_to_tsv,
    word_to_text,
)
from splythoff.tables import positions_table


def test_tsv_with_letter_header():
    table = positions_table(3, 4)
    assert table_to_tsv(table) == (
        "\t0\t1\t0\t2\n"
        "X0\t1\t3\t5\t7\n"
        "X1\t2\t6\t9\t13\n"
        "X2\t4\t11\t17\t24\n"
    )


def test_tsv_without_header():
    table = wythoff_columns(4)
    assert table_to_tsv(table) == "A\t1\t3\t4\t6\nB\t2\t5\t7\t10\n"


def test_csv_names_header_row():
    table = positions_table(3, 3)
    lines = table_to_csv(table).splitlines()
    assert lines[0] == "header,0,1,0"
    assert lines[1] == "X0,1,3,5"


def test_csv_of_mex_table():
    table = splythoff_columns(3)
    assert table_to_csv(table) == (
        "Delta,1,2,4\nA,1,3,4\nB,2,5,8\nSigma,3,8,12\n"
    )


def test_bfile_format():
    assert row_to_bfile([1, 3, 4]) == "1 1\n2 3\n3 4\n"
    assert row_to_bfile([]) == ""


def test_word_to_text_hex_letters():
    assert word_to_text(bytes([0, 1, 2, 10, 15])) == "012af"
    assert word_to_text(b"") == ""
