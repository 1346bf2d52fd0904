import unittest

from catkit import verification
from catkit.errors import PreconditionError
from catkit.verification import CaseResult, VerificationReport


class VerificationReportTestCase(unittest.TestCase):
    def test_case_records_first_counterexample(self):
        report = VerificationReport("demo", max_n=3)
        with self.assertLogs("catkit.verification", level="ERROR"):
            with report.case("parity", "n<=3") as case:
                for n in range(4):
                    case.check(n % 2 == 0 or n > 3, lambda: f"n={n}")

        self.assertFalse(report.passed)
        self.assertEqual(report.cases[0].checked, 4)
        self.assertEqual(report.cases[0].counterexample, "n=1")
        self.assertEqual(report.first_counterexample, "parity: n=1")

    def test_domain_errors_count_as_counterexamples(self):
        report = VerificationReport("demo", max_n=1)
        with self.assertLogs("catkit.verification", level="ERROR"):
            with report.case("raises", "-"):
                raise PreconditionError("bad input")

        self.assertFalse(report.passed)
        self.assertIn("PreconditionError", report.first_counterexample)

    def test_records(self):
        report = VerificationReport("demo", max_n=1)
        report.cases.append(CaseResult("ok", "n<=1", checked=2))
        self.assertTrue(report.passed)
        self.assertIsNone(report.first_counterexample)
        self.assertEqual(
            report.records(),
            [
                {
                    "suite": "demo",
                    "case": "ok",
                    "ranges": "n<=1",
                    "checked": 2,
                    "status": "pass",
                    "counterexample": None,
                }
            ],
        )


class SuiteTestCase(unittest.TestCase):
    def assertSuitePasses(self, report: VerificationReport):
        self.assertTrue(report.passed, report.first_counterexample)
        self.assertTrue(report.cases)
        for case in report.cases:
            self.assertGreater(case.checked, 0, case.name)

    def test_counts(self):
        self.assertSuitePasses(verification.verify_counts(5))

    def test_bijections(self):
        self.assertSuitePasses(verification.verify_bijections(5))

    def test_game(self):
        self.assertSuitePasses(verification.verify_game(5, report_until=30))

    def test_bijections_through_seven(self):
        report = verification.verify_bijections(7)
        self.assertSuitePasses(report)
        names = [case.name for case in report.cases]
        self.assertIn("theta", names)
        self.assertIn("tau on T11", names)

    def test_wall_time_is_kept_off_the_records(self):
        report = verification.verify_game(3, report_until=26)
        self.assertGreater(report.wall_time, 0)
        for record in report.records():
            self.assertNotIn("wall_time", record)

    def test_run_suites(self):
        reports = verification.run_suites("all", 3, report_until=26)
        self.assertEqual(
            [report.suite for report in reports], ["counts", "bijections", "game"]
        )
        self.assertTrue(all(report.passed for report in reports))
        self.assertEqual(len(verification.run_suites("game", 3)), 1)


if __name__ == "__main__":
    unittest.main()
