import pytest

from momentangle.homology import (chain_complex, homology,
                                  is_homology_sphere, manifold_verdict)
from momentangle.simplicial import (boundary_of_simplex,
                                    cyclic_polytope_boundary, new_complex)

# Minimal 6-vertex triangulation of the real projective plane: the one
# complex in the suite with integer torsion (H_1 = Z/2).
RP2 = new_complex(6, [
    (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
])


class TestChainComplex:
    def test_triangle_boundary_matrix(self):
        cc = chain_complex(boundary_of_simplex(2))
        d1 = cc.boundaries[1]
        assert (d1.rows, d1.cols) == (3, 3)
        for col in d1.transpose().data:
            assert sum(col) == 0

    def test_point(self):
        cc = chain_complex(new_complex(1, [(1,)]))
        assert len(cc.boundaries) == 1  # just the augmentation

    def test_c69_top_boundary(self):
        cc = chain_complex(cyclic_polytope_boundary(6, 9))
        assert cc.boundaries[5].cols == 30

    def test_boundary_squared_zero(self):
        for K in [boundary_of_simplex(4), RP2, cyclic_polytope_boundary(3, 6)]:
            cc = chain_complex(K)
            for d in range(len(cc.boundaries) - 1):
                assert (cc.boundaries[d] @ cc.boundaries[d + 1]).is_zero()


class TestHomology:
    def test_sphere_s2(self):
        prof = homology(boundary_of_simplex(3))
        assert prof.betti == (0, 0, 1)
        assert all(t == () for t in prof.torsion)

    def test_simplex_boundaries_are_spheres(self):
        for n in range(1, 7):
            prof = homology(boundary_of_simplex(n))
            want = tuple(int(d == n - 1) for d in range(n))
            assert prof.betti == want
            assert all(t == () for t in prof.torsion)

    def test_two_points_reduced(self):
        prof = homology(new_complex(2, [(1,), (2,)]))
        assert prof.betti == (1,)

    def test_unreduced(self):
        prof = homology(new_complex(2, [(1,), (2,)]), reduced=False)
        assert prof.betti == (2,)

    def test_c69_is_homology_s5(self):
        prof = homology(cyclic_polytope_boundary(6, 9))
        assert prof.betti == (0, 0, 0, 0, 0, 1)
        assert all(t == () for t in prof.torsion)

    def test_rp2_torsion(self):
        prof = homology(RP2)
        assert prof.betti == (0, 0, 0)
        assert prof.torsion[1] == (2,)
        assert prof.mod2 == (0, 1, 1)

    def test_empty_complex(self):
        prof = homology(new_complex(2, []))
        assert prof.betti == ()

    def test_euler_characteristic_identity(self):
        for K in [boundary_of_simplex(4), RP2,
                  cyclic_polytope_boundary(4, 7),
                  new_complex(5, [(1, 2), (3,), (4, 5)])]:
            prof = homology(K, reduced=False)
            chi_betti = sum((-1) ** d * b for d, b in enumerate(prof.betti))
            assert chi_betti == K.euler_characteristic()

    def test_universal_coefficients_identity(self):
        for K in [boundary_of_simplex(3), RP2,
                  cyclic_polytope_boundary(6, 9)]:
            prof = homology(K)
            for d in prof.degrees():
                below = prof.torsion[d - 1] if d > 0 else ()
                expect = (prof.betti[d]
                          + sum(1 for t in prof.torsion[d] if t % 2 == 0)
                          + sum(1 for t in below if t % 2 == 0))
                assert prof.mod2[d] == expect


class TestSphereCertificate:
    def test_simplex_boundaries(self):
        for n in range(1, 6):
            assert is_homology_sphere(boundary_of_simplex(n)).verdict

    def test_c69(self):
        cert = is_homology_sphere(cyclic_polytope_boundary(6, 9))
        assert cert.verdict
        assert cert.criterion == "recursive-links"

    def test_two_disjoint_triangle_boundaries(self):
        K = new_complex(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert not is_homology_sphere(K).verdict

    def test_single_edge(self):
        assert not is_homology_sphere(new_complex(2, [(1, 2)])).verdict

    def test_rp2_rejected(self):
        assert not is_homology_sphere(RP2).verdict

    def test_certificate_json(self):
        cert = is_homology_sphere(boundary_of_simplex(2))
        obj = cert.to_json()
        assert obj["verdict"] is True
        assert obj["criterion"] == "recursive-links"
        assert obj["root"] in obj["complexes"]


class TestManifoldVerdict:
    def test_certified(self):
        assert manifold_verdict(boundary_of_simplex(4)) == "certified_manifold"
        assert (manifold_verdict(cyclic_polytope_boundary(6, 9))
                == "certified_manifold")

    def test_unknown_never_claims_nonmanifold(self):
        assert manifold_verdict(new_complex(2, [(1, 2)])) == "unknown"
