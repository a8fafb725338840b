import csv
import xml.etree.ElementTree as ET

from liouville.cli import main


def read_csv(path):
    with open(path, newline="") as handle:
        return list(csv.reader(handle))


def test_verify_parabolic_passes(tmp_path):
    out = tmp_path / "verify.csv"
    code = main(["verify", "--chart", "parabolic", "--rects", "25",
                 "--seed", "7", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["chart", "check", "detail", "value", "tolerance", "verdict"]
    assert all(row[5] in ("pass", "witness", "small") for row in rows[1:])
    gap_rows = [row for row in rows if row[1] == "diagonal_gap"]
    assert len(gap_rows) == 25
    for row in gap_rows:
        assert abs(float(row[3])) <= float(row[4])


def test_verify_unknown_chart_is_usage_error(tmp_path, capsys):
    code = main(["verify", "--chart", "nonexistent",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2
    assert "unknown chart" in capsys.readouterr().err


def test_verify_enneper_reports_witness(tmp_path):
    out = tmp_path / "enneper.csv"
    code = main(["verify", "--chart", "enneper_polynomial", "--rects", "10",
                 "--seed", "3", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    witness_rows = [row for row in rows if row[1] == "non_liouville_witness"]
    assert len(witness_rows) == 1
    assert float(witness_rows[0][3]) >= 12.0 - 1e-6
    documented = [row for row in rows if row[1] == "diagonal_gap"
                  and "M=(1,1)" in row[2]]
    assert documented and abs(float(documented[0][3]) - 12.0) <= 1e-7


def test_verify_ellipsoid_conformal_chart(tmp_path):
    out = tmp_path / "ellipsoid.csv"
    code = main(["verify", "--chart", "ellipsoid", "--axes", "3,2,1",
                 "--rects", "20", "--seed", "5", "--out", str(out)])
    assert code == 0


def test_verify_deterministic_bytes(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    for out in (out1, out2):
        assert main(["verify", "--chart", "polar_log", "--rects", "15",
                     "--seed", "42", "--out", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_seed_changes_rows(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["verify", "--chart", "polar_log", "--rects", "15",
                 "--seed", "1", "--out", str(out1)]) == 0
    assert main(["verify", "--chart", "polar_log", "--rects", "15",
                 "--seed", "2", "--out", str(out2)]) == 0
    assert out1.read_bytes() != out2.read_bytes()


def test_net_svg_well_formed(tmp_path):
    svg = tmp_path / "net.svg"
    code = main(["net", "--chart", "parabolic", "--rect", "1.0,0.9,0.5,0.4",
                 "--svg", str(svg), "--no-timestamp"])
    assert code == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
    # net lines plus 4 rectangle sides plus 2 diagonals
    assert len(polylines) >= 24 + 6
    text = svg.read_text()
    assert "diagonal energies" in text
    assert "generated" not in text


def test_net_timestamp_toggle(tmp_path):
    svg = tmp_path / "net.svg"
    assert main(["net", "--chart", "cartesian", "--svg", str(svg)]) == 0
    assert "generated" in svg.read_text()


def test_net_discrete_mode(tmp_path):
    svg = tmp_path / "net6.svg"
    code = main(["net", "--chart", "parabolic", "--rect", "1.0,0.9,0.5,0.4",
                 "--k", "6", "--svg", str(svg), "--no-timestamp"])
    assert code == 0
    assert "discrete energies (k=6)" in svg.read_text()


def test_net_determinism_without_timestamp(tmp_path):
    svg1 = tmp_path / "n1.svg"
    svg2 = tmp_path / "n2.svg"
    for svg in (svg1, svg2):
        assert main(["net", "--chart", "polar_log", "--rect", "0.0,3.0,0.3,0.5",
                     "--svg", str(svg), "--no-timestamp"]) == 0
    assert svg1.read_bytes() == svg2.read_bytes()


def test_net_metric_only_chart_rejected(tmp_path):
    code = main(["net", "--chart", "sphere_elliptic",
                 "--svg", str(tmp_path / "x.svg")])
    assert code == 2


def test_net_conformal_ellipsoid_chart(tmp_path):
    svg = tmp_path / "ellipsoid_net.svg"
    code = main(["net", "--chart", "ellipsoid", "--axes", "3,2,1",
                 "--rect", "0.8,0.5,0.2,0.15", "--nu", "8", "--nv", "8",
                 "--samples", "48", "--svg", str(svg), "--no-timestamp"])
    assert code == 0
    ET.parse(svg)


def test_table_k_sweep(tmp_path):
    out = tmp_path / "table.csv"
    code = main(["table", "--chart", "plane_u2_v5", "--rect", "1.0,1.0,0.4,0.5",
                 "--k", "32", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 33
    for row in rows[1:]:
        assert abs(float(row[3])) <= 1e-10      # discrete gap
        assert float(row[5]) <= 1.0 + 1e-12     # Schwarz ratio


def test_nd_verify(tmp_path):
    out = tmp_path / "nd.csv"
    code = main(["nd-verify", "--dim", "5", "--trials", "8", "--seed", "11",
                 "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 1 + 8 * 2 ** 4
    assert all(row[5] == "pass" for row in rows[1:])


def test_sn_table_residuals(tmp_path):
    out = tmp_path / "sn.csv"
    code = main(["sn-table", "--n", "0.4", "--m", "0.6", "--count", "10",
                 "--u-max", "1.2", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 11
    for row in rows[1:]:
        assert float(row[4]) <= 1e-9


def test_ellipsoid_map_outputs(tmp_path):
    out = tmp_path / "map.csv"
    svg = tmp_path / "map.svg"
    code = main(["ellipsoid-map", "--axes", "3,2,1", "--grid", "5",
                 "--points", "128", "--out", str(out), "--svg", str(svg),
                 "--no-timestamp"])
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["x", "y", "U", "V", "residual"]
    assert len(rows) == 26
    for row in rows[1:]:
        assert 4.0 <= float(row[2]) <= 9.0
        assert 1.0 <= float(row[3]) <= 4.0
        assert float(row[4]) <= 1e-10
    ET.parse(svg)


def test_geodesic_csv_and_svg(tmp_path):
    out = tmp_path / "geo.csv"
    svg = tmp_path / "geo.svg"
    code = main(["geodesic", "--chart", "parabolic", "--start", "1.0,1.0",
                 "--a-const", "1.0", "--T", "1.0", "--step", "0.01",
                 "--out", str(out), "--svg", str(svg), "--no-timestamp"])
    assert code == 0
    rows = read_csv(out)
    assert rows[0][:5] == ["t", "u", "v", "du", "dv"]
    assert all(float(row[5]) <= 1e-12 for row in rows[1:])
    ET.parse(svg)


def test_geodesic_requires_known_split(tmp_path):
    code = main(["geodesic", "--chart", "enneper_polynomial",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_config_file_defaults_and_flag_override(tmp_path):
    config = tmp_path / "run.ini"
    config.write_text("rects = 4\nseed = 9\n")
    out1 = tmp_path / "one.csv"
    assert main(["verify", "--chart", "cartesian", "--config", str(config),
                 "--out", str(out1)]) == 0
    rows = read_csv(out1)
    assert len([r for r in rows if r[1] == "diagonal_gap"]) == 4
    out2 = tmp_path / "two.csv"
    assert main(["verify", "--chart", "cartesian", "--config", str(config),
                 "--rects", "6", "--out", str(out2)]) == 0
    rows = read_csv(out2)
    assert len([r for r in rows if r[1] == "diagonal_gap"]) == 6


def test_io_failure_exit_code(tmp_path):
    code = main(["verify", "--chart", "cartesian", "--rects", "2",
                 "--out", str(tmp_path / "missing" / "deep" / "out.csv")])
    assert code == 3


def test_verification_failure_exit_code(tmp_path):
    # an unreachable tolerance turns finite roundoff gaps into failures
    code = main(["verify", "--chart", "parabolic", "--rects", "10",
                 "--seed", "1", "--tol", "1e-30",
                 "--out", str(tmp_path / "strict.csv")])
    assert code == 1


def test_rect_outside_domain_is_usage_error(tmp_path):
    code = main(["verify", "--chart", "parabolic", "--rect", "50,0,1,1",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2
