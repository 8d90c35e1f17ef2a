"""Tests for the text formats."""

import pytest

from matroid_moves.errors import FormatError
from matroid_moves.formats import (
    format_certificate,
    format_matroid,
    format_orbit_table,
    format_sequence,
    parse_certificate,
    parse_hex,
    parse_matroid,
    parse_sequence_file,
    parse_state_spec,
    read_matroid,
    read_sequence,
    validate_file_exists,
    write_text,
)
from matroid_moves.matroid_state import Matroid
from matroid_moves.models.moves import Move, MoveSequence
from matroid_moves.models.properties import Certificate, CertificateRow
from matroid_moves.orbit_engine import GeneratorSet, orbit
from matroid_moves.projective_space import Space


class TestFileHelpers:
    """Tests for file validation and writing."""

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises FormatError."""
        with pytest.raises(FormatError, match="does not exist"):
            validate_file_exists(tmp_path / "missing.txt")

    def test_empty_file(self, tmp_path):
        """Test that an empty file is rejected."""
        path = tmp_path / "empty.txt"
        path.write_text("")

        with pytest.raises(FormatError, match="too small"):
            validate_file_exists(path)

    def test_write_creates_parents(self, tmp_path):
        """Test that write_text creates missing directories."""
        path = write_text(tmp_path / "a" / "b" / "m.txt", "r=3\nground=3\n")

        assert path.read_text() == "r=3\nground=3\n"


class TestMatroidFormat:
    """Tests for matroid text."""

    def test_format(self, p3):
        """Test the two-line rendering with bit 0 as element 1."""
        M = Matroid.from_elements(p3, [1, 2, 5, 6])

        assert format_matroid(M) == "r=3\nground=33\n"

    def test_parse_ground(self):
        """Test parsing a ground= mask."""
        M = parse_matroid("r=3\nground=33\n")

        assert M.r == 3
        assert M.elements() == [1, 2, 5, 6]

    def test_parse_elements_and_comments(self):
        """Test parsing an elements= list with comments and blank lines."""
        M = parse_matroid("# a comment\n\nr=3\nelements=1, 2,4\n")

        assert M.mask == 0b1011

    def test_hex_prefix(self):
        """Test that a 0x prefix is accepted."""
        assert parse_hex("0x7F") == 0x7F
        assert parse_matroid("r=3\nground=0x7f\n") == Matroid.full(Space(3))

    def test_bad_hex_names_line(self):
        """Test that a bad mask reports its line number."""
        with pytest.raises(FormatError) as excinfo:
            parse_matroid("r=3\nground=zz\n")

        assert excinfo.value.line == 2

    def test_mask_out_of_range_names_line(self):
        """Test that a mask beyond E(P_r) reports its line number."""
        with pytest.raises(FormatError) as excinfo:
            parse_matroid("r=2\nground=ff\n")

        assert excinfo.value.line == 2

    def test_bad_rank(self):
        """Test that a bad rank reports the r= line."""
        with pytest.raises(FormatError) as excinfo:
            parse_matroid("ground=3\nr=x\n")

        assert excinfo.value.line == 2

    @pytest.mark.parametrize(
        "text",
        [
            "ground=3\n",
            "r=3\n",
            "r=3\nground=3\nelements=1,2\n",
            "r=3\nground=3\ncolour=red\n",
            "r=3\nr=3\nground=3\n",
            "r=3\njust text\n",
        ],
    )
    def test_malformed(self, text):
        """Test that malformed matroid text raises FormatError."""
        with pytest.raises(FormatError):
            parse_matroid(text)

    def test_read_includes_path(self, tmp_path):
        """Test that errors from files carry the path."""
        path = tmp_path / "bad.txt"
        path.write_text("r=3\nground=zz\n")

        with pytest.raises(FormatError) as excinfo:
            read_matroid(path)

        assert excinfo.value.path == str(path)
        assert str(path) in str(excinfo.value)


class TestStateSpec:
    """Tests for parse_state_spec."""

    def test_keywords(self, p3):
        """Test the full and empty keywords."""
        assert parse_state_spec(p3, "full").mask == p3.full_mask
        assert parse_state_spec(p3, "empty").mask == 0

    def test_elements_and_hex(self, p3):
        """Test the elements=, hex= and ground= forms."""
        assert parse_state_spec(p3, "elements=1,2").mask == 0b11
        assert parse_state_spec(p3, "hex=33").mask == 0x33
        assert parse_state_spec(p3, "ground=0x33").mask == 0x33

    def test_named(self, p4):
        """Test catalogue names."""
        assert parse_state_spec(p4, "named:F_7").elements() == list(range(1, 8))

    def test_file(self, p3, tmp_path):
        """Test reading a state from a matroid file."""
        path = tmp_path / "m.txt"
        path.write_text("r=3\nground=33\n")

        assert parse_state_spec(p3, str(path)).mask == 0x33

    def test_file_rank_mismatch(self, p4, tmp_path):
        """Test that a file for another rank is rejected."""
        path = tmp_path / "m.txt"
        path.write_text("r=3\nground=33\n")

        with pytest.raises(FormatError, match="expected r=4"):
            parse_state_spec(p4, str(path))

    @pytest.mark.parametrize("spec", ["elements=9", "hex=ff", "named:F_7^*", "named:nope"])
    def test_invalid_for_space(self, p3, spec):
        """Test that specs outside the space raise FormatError."""
        with pytest.raises(FormatError):
            parse_state_spec(p3, spec)


class TestSequenceFormat:
    """Tests for sequence files."""

    def test_format_with_headers(self):
        """Test header order and trailer comments."""
        seq = MoveSequence(moves=[Move.swap_off(3), Move.swap_on(1)])
        text = format_sequence(
            seq, r=3, start=0x7F, target=0x7D, headers={"method": "full"}, trailer=["done"]
        )

        assert text == (
            "# r=3\n"
            "# start=7f\n"
            "# target=7d\n"
            "# method=full\n"
            "swap- f=3\n"
            "swap+ f=1\n"
            "# done\n"
        )

    def test_parse_headers(self):
        """Test that headers are collected and free comments ignored."""
        text = "# r=4\n# start=7fff\n# target=3\n# free comment\nomega\n\nsigma a=5\n"
        parsed = parse_sequence_file(text)

        assert parsed.r == 4
        assert parsed.start == 0x7FFF
        assert parsed.target == 0x3
        assert parsed.seq.moves == [Move.omega(), Move.sigma(5)]
        assert "free comment" not in parsed.headers

    def test_trajectory_trailer_is_not_a_header(self):
        """Test that trailer lines with spaces before '=' are skipped."""
        parsed = parse_sequence_file("omega\n# trajectory i=0 mask=0\n")

        assert parsed.headers == {}

    def test_bad_move_names_line(self):
        """Test the line number of a bad move."""
        with pytest.raises(FormatError) as excinfo:
            parse_sequence_file("# r=3\nomega\nrotate a=1\n")

        assert excinfo.value.line == 3

    def test_bad_header_value(self):
        """Test that a non-numeric rank header raises FormatError."""
        with pytest.raises(FormatError):
            parse_sequence_file("# r=three\nomega\n")

    def test_read_sequence(self, tmp_path):
        """Test reading a sequence from disk."""
        path = tmp_path / "seq.txt"
        path.write_text("lambda a=3\nhypcomp a=1\n")

        parsed = read_sequence(path)

        assert parsed.r is None
        assert parsed.seq.moves == [Move.lam(3), Move.hypcomp(1)]


def _certificate():
    rows = [
        CertificateRow(
            a=a, green_rank=3, red_rank=3, sigma_p2=True, lambda_eq=True, lambda_p2=True
        )
        for a in range(1, 8)
    ]
    return Certificate(
        r=3,
        witness=0x2B,
        omega_p2=True,
        full_fails_p2=True,
        full_failing_functional=1,
        rows=rows,
    )


class TestCertificateFormat:
    """Tests for certificate files."""

    def test_format_header(self):
        """Test the header lines and the first row."""
        lines = format_certificate(_certificate()).splitlines()

        assert lines[:7] == [
            "kind: unreachability-certificate",
            "r: 3",
            "witness: 2b",
            "omega_p2: 1",
            "full_fails_p2: 1",
            "full_failing_functional: 1",
            "functionals: 7",
        ]
        assert lines[7] == (
            "a=1 green_rank=3 red_rank=3 sigma_p2=1 lambda_eq=1 lambda_p2=1"
        )
        assert len(lines) == 14

    def test_parse_formatted(self):
        """Test that a formatted certificate parses back to the same model."""
        cert = _certificate()

        assert parse_certificate(format_certificate(cert)) == cert

    def test_wrong_kind(self):
        """Test that other files are refused."""
        with pytest.raises(FormatError, match="unreachability-certificate"):
            parse_certificate("kind: orbit\nr: 3\n")

    def test_missing_header(self):
        """Test that a missing header key is reported."""
        text = "kind: unreachability-certificate\nr: 3\n"

        with pytest.raises(FormatError, match="witness"):
            parse_certificate(text)

    def test_row_count_mismatch(self):
        """Test that the functionals header must match the rows."""
        text = format_certificate(_certificate()).replace("functionals: 7", "functionals: 8")

        with pytest.raises(FormatError, match="declares 8"):
            parse_certificate(text)

    def test_bad_row_names_line(self):
        """Test the line number of a malformed row."""
        text = format_certificate(_certificate()).replace("sigma_p2=1", "sigma_p2=x", 1)

        with pytest.raises(FormatError) as excinfo:
            parse_certificate(text)

        assert excinfo.value.line == 8


class TestOrbitTableFormat:
    """Tests for orbit table export."""

    def test_root_first(self, full3):
        """Test that the root line comes first and every state appears once."""
        table = orbit(full3.space, full3, GeneratorSet(omega=True, sigma=True))
        lines = format_orbit_table(table).splitlines()

        assert lines[0] == "7f - root"
        assert len(lines) == 16
        assert lines[1] == "0 7f omega"
        assert len({line.split()[0] for line in lines}) == 16
