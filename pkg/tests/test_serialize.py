from __future__ import annotations

from conftest import solver_basis
from zoo import weil2
from formalfj import serialize
from formalfj.fjseries import fj_invert
from formalfj.jacobi import jacobi_basis, weak_generators
from formalfj.lattice import EvenLattice, discriminant_form
from formalfj.siegel import fj_to_siegel


def artifacts():
    f = solver_basis(10)[0]
    return [
        jacobi_basis(10, 2, 3),
        weak_generators(2)[0],
        f,
        list(solver_basis(12)),
        fj_invert(solver_basis(4)[0]),
        fj_to_siegel(f),
        weil2("A2"),
        discriminant_form(EvenLattice([[2, -1], [-1, 2]])),
    ]


def test_write_read_write_is_byte_identical(tmp_path):
    for i, obj in enumerate(artifacts()):
        p1, p2 = tmp_path / ("a%d.json" % i), tmp_path / ("b%d.json" % i)
        text = serialize.write_artifact(p1, obj, params={"i": i})
        back = serialize.read_artifact(p1)
        env = serialize.read_envelope(p1)
        serialize.write_artifact(p2, back, env["kind"], env["params"])
        assert p1.read_bytes() == p2.read_bytes() == text.encode()


def test_kinds():
    kinds = [serialize.kind_of(a) for a in artifacts()]
    assert kinds == ["jacobi_basis", "jacobi_form", "fj_series", "fj_basis", "meromorphic_fj",
                     "siegel_form", "representation", "discriminant_form"]
