"""
Main application class tying the algebra, cohomology and extension modules together
"""
import logging
import time
from typing import Any, Dict, Optional

import numpy as np

from algebra import (
    center,
    format_lambda,
    graded_isomorphism_search,
    is_filiform,
    is_zero_lambda,
    iso_classify,
    make_m2,
    parse_lambda,
    verify_restricted,
    VerificationReport,
)
from cochain import crosscheck_differentials
from cohomology import (
    CLAIMS,
    abelianization_dimensions,
    expected_dimensions,
    expected_grade_table,
    h1,
    h1_star,
    h2,
    h2_star,
    touches_last_column,
    verify_named_basis,
)
from config import Config
from exceptions import FiliformError, MalformedModulus
from extensions import catalog_frame, extension_catalog, pfold_bracket_witness
from field import make_field
from report import Report
from restricted import complex_property

logger = logging.getLogger(__name__)


def parse_modulus(text: str):
    """ "c0,c1" for the monic quadratic t^2 + c1*t + c0 """
    try:
        c0, c1 = (int(part) for part in text.split(","))
    except ValueError:
        raise MalformedModulus(f"field extension must be given as c0,c1, got {text!r}")
    return c0, c1


class FiliformCohomologyLab:
    """Builds m_2^lambda(p) for one (p, lambda, field) and runs the command suites on it"""

    def __init__(self):
        Config.validate_config()
        self.config = Config()
        self.field = None
        self.algebra = None

    def load_algebra(
        self, prime: int, lam_text: str = "zero", field_ext: Optional[str] = None, max_prime: Optional[int] = None
    ) -> Dict[str, Any]:
        """Validate the input and construct the field and the algebra"""
        try:
            Config.validate_prime(prime, max_prime)
            modulus = parse_modulus(field_ext) if field_ext else None
            self.field = make_field(prime, modulus)
            lam = parse_lambda(lam_text, self.field)
            self.algebra = make_m2(self.field, lam)
            return {
                'success': True,
                'message': f'Built {self.algebra.name} over {self.field.describe()}',
            }
        except FiliformError as e:
            return {
                'success': False,
                'message': f'Invalid input: {str(e)}',
                'error_type': type(e).__name__,
            }

    def tamper(self, i: int, j: int) -> Dict[str, Any]:
        """Zero the structure constant [e_i, e_j] (1-based); a hook for exercising the verifier"""
        if self.algebra is None:
            return {'success': False, 'message': 'No algebra loaded'}
        if not 1 <= i < j <= self.algebra.dim:
            return {'success': False, 'message': f'Invalid input: no structure constant ({i}, {j})'}
        self.algebra = self.algebra.with_structure_constant(i - 1, j - 1, self.algebra.zero())
        return {'success': True, 'message': f'Set [e_{i}, e_{j}] = 0'}

    def _report(self, command: str, passed: bool, results: Dict[str, Any], started: Optional[float]) -> Report:
        A = self.algebra
        timing = time.perf_counter() - started if started is not None else None
        return Report(command, A.p, self.field.describe(), format_lambda(self.field, A.lam), bool(passed), results, timing)

    # ------------------------------------------------------------------
    # verify
    # ------------------------------------------------------------------
    def verify(self, seed: int = None, samples: int = None, timing: bool = False) -> Dict[str, Any]:
        """Restricted axioms, differential cross-checks and complex properties"""
        if self.algebra is None:
            return {'success': False, 'message': 'No algebra loaded'}
        started = time.perf_counter() if timing else None
        A = self.algebra

        structure = VerificationReport(f"structure of {A.name}")
        structure.add("filiform", is_filiform(A), "dim g^k = n - k")
        last = A.basis(A.dim - 1)
        centre = center(A)
        structure.add(
            "center_is_last_basis_vector",
            centre.dim == 1 and not np.any(centre.basis[0] != last),
            f"dim Z = {centre.dim}",
        )

        reports = [
            verify_restricted(A, samples=samples, seed=seed),
            crosscheck_differentials(A),
            complex_property(A),
            structure,
        ]
        passed = all(r.passed for r in reports)
        report = self._report("verify", passed, {"checks": [r.as_dict() for r in reports]}, started)
        return {
            'success': True,
            'message': 'All checks passed' if passed else 'Verification mismatch',
            'report': report,
        }

    # ------------------------------------------------------------------
    # cohomology
    # ------------------------------------------------------------------
    def cohomology(self, timing: bool = False) -> Dict[str, Any]:
        """H^1, H^1*, H^2, H^2* with the grade table and the named bases"""
        if self.algebra is None:
            return {'success': False, 'message': 'No algebra loaded'}
        started = time.perf_counter() if timing else None
        A = self.algebra
        p = A.p
        expected = expected_dimensions(p, is_zero_lambda(A.lam))

        results: Dict[str, Any] = {}
        passed = True
        for key, compute in (("h1", h1), ("h1_star", h1_star), ("h2", h2), ("h2_star", h2_star)):
            group = compute(A)
            results[key] = {
                "name": group.name,
                "dimension": group.dimension,
                "expected": expected[key],
                "kernel_dim": group.kernel.dim,
                "coboundary_dim": group.coboundaries.dim,
                "representatives": group.describe_representatives(self.field, A.dim),
            }
            passed = passed and group.dimension == expected[key]
            if key == "h2":
                table = expected_grade_table(p)
                results["grade_table"] = [
                    {"grade": k, "kernel_dim": dim, "expected": table[k]} for k, dim in group.grade_table.items()
                ]
                passed = passed and all(row["kernel_dim"] == row["expected"] for row in results["grade_table"])

        abelian, restricted_abelian = abelianization_dimensions(A)
        results["abelianization"] = {"ordinary": abelian, "restricted": restricted_abelian}

        named = [verify_named_basis(A, claim) for claim in CLAIMS]
        results["named_bases"] = [{"subject": r.subject, "passed": r.passed} for r in named]
        passed = passed and all(r.passed for r in named)

        return {
            'success': True,
            'message': 'Dimensions match' if passed else 'Verification mismatch',
            'report': self._report("cohomology", passed, results, started),
        }

    # ------------------------------------------------------------------
    # extensions
    # ------------------------------------------------------------------
    def extensions(self, seed: int = None, samples: int = None, timing: bool = False) -> Dict[str, Any]:
        """The catalog of restricted central extensions with formulas and verdicts"""
        if self.algebra is None:
            return {'success': False, 'message': 'No algebra loaded'}
        if not self.field.is_prime_field:
            return {'success': False, 'message': 'Invalid input: extension tables are produced over GF(p) only',
                    'error_type': 'MalformedModulus'}
        started = time.perf_counter() if timing else None
        A = self.algebra

        frame = catalog_frame(A, verify=True, samples=samples, seed=seed)
        catalog = []
        for record in frame.to_dict(orient="records"):
            record["verified"] = bool(record["verified"])
            catalog.append(record)
        passed = all(entry["verified"] for entry in catalog)

        results: Dict[str, Any] = {"catalog": catalog, "pfold_witness": None}
        for E in extension_catalog(A):
            if not touches_last_column(E.cocycle.phi, A.p):
                continue
            found = pfold_bracket_witness(E)
            if found is not None:
                sequence, value = found
                results["pfold_witness"] = {
                    "extension": E.name,
                    "sequence": [f"e_{k}" if k <= A.dim else "c" for k in sequence],
                    "value": [self.field.format(value[k]) for k in range(value.shape[0])],
                }
                break

        return {
            'success': True,
            'message': f'{len(catalog)} extensions' + ('' if passed else ', some failed verification'),
            'report': self._report("extensions", passed, results, started),
        }

    # ------------------------------------------------------------------
    # iso
    # ------------------------------------------------------------------
    def iso(self, lam_text: str, lam_prime_text: str, timing: bool = False) -> Dict[str, Any]:
        """Graded isomorphism of m_2^lambda(p) and m_2^lambda'(p)"""
        if self.field is None:
            return {'success': False, 'message': 'No field loaded'}
        started = time.perf_counter() if timing else None
        try:
            lam = parse_lambda(lam_text, self.field)
            lam_prime = parse_lambda(lam_prime_text, self.field)
        except FiliformError as e:
            return {'success': False, 'message': f'Invalid input: {str(e)}', 'error_type': type(e).__name__}

        mu = iso_classify(self.field, lam, lam_prime)
        oracle = graded_isomorphism_search(make_m2(self.field, lam), make_m2(self.field, lam_prime))
        agrees = (mu is None) == (oracle is None)
        results = {
            "lambda_prime": format_lambda(self.field, lam_prime),
            "isomorphic": mu is not None,
            "mu": self.field.format(mu) if mu is not None else None,
            "oracle_agrees": agrees,
        }
        self.algebra = make_m2(self.field, lam)
        report = self._report("iso", agrees, results, started)
        return {
            'success': True,
            'message': f'mu = {results["mu"]}' if mu is not None else 'Not isomorphic',
            'report': report,
        }

    # ------------------------------------------------------------------
    # all
    # ------------------------------------------------------------------
    def run_all(self, seed: int = None, samples: int = None, timing: bool = False) -> Dict[str, Any]:
        """verify, cohomology and extensions combined into one report"""
        if self.algebra is None:
            return {'success': False, 'message': 'No algebra loaded'}
        started = time.perf_counter() if timing else None

        verified = self.verify(seed=seed, samples=samples)['report']
        computed = self.cohomology()['report']
        results: Dict[str, Any] = {key: computed.results[key] for key in ("h1", "h1_star", "h2", "h2_star")}
        passed = verified.passed and computed.passed

        if self.field.is_prime_field:
            extended = self.extensions(seed=seed, samples=samples)['report']
            results["extensions"] = extended.results
            passed = passed and extended.passed
        else:
            results["extensions"] = None
        results["verify"] = verified.results

        return {
            'success': True,
            'message': 'All checks passed' if passed else 'Verification mismatch',
            'report': self._report("all", passed, results, started),
        }
