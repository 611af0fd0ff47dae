from core.services.verify import SuiteResult, VerifyConfig, run_verify

__all__ = [
    "SuiteResult",
    "VerifyConfig",
    "run_verify",
]
