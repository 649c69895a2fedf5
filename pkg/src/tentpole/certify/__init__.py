"""Nonnegativity decisions and sums-of-squares certificates on 1-dimensional complexes."""

from tentpole.certify.build import certify, tent_certificate
from tentpole.certify.generate import random_nonneg
from tentpole.certify.model import Certificate, CertificateMeta
from tentpole.certify.nonneg import NonnegReport, Verdict, Witness, is_nonneg
from tentpole.certify.qm import QmTerm, expand_qm, qm_convert
from tentpole.certify.verify import ComponentReport, VerifyReport, expand, verify

__all__ = [
    "Certificate",
    "CertificateMeta",
    "ComponentReport",
    "NonnegReport",
    "QmTerm",
    "Verdict",
    "VerifyReport",
    "Witness",
    "certify",
    "expand",
    "expand_qm",
    "is_nonneg",
    "qm_convert",
    "random_nonneg",
    "tent_certificate",
    "verify",
]
