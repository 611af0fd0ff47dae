from core.services.verify.configuration import VerifyConfig
from core.services.verify.instances import Instance, random_coremap, random_instance, random_problem, singular_problem
from core.services.verify.service import UnknownSuiteError, run_verify
from core.services.verify.suites import SUITES, SuiteResult

__all__ = [
    "Instance",
    "SUITES",
    "SuiteResult",
    "UnknownSuiteError",
    "VerifyConfig",
    "random_coremap",
    "random_instance",
    "random_problem",
    "singular_problem",
    "run_verify",
]
