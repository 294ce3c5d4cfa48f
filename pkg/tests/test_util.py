import contextlib
import io
import unittest
from quorum import parser, util


class MessageTest(unittest.TestCase):

    def setUp(self):
        self.colored = util.COLORED_MESSAGES
        util.COLORED_MESSAGES = False

    def tearDown(self):
        util.COLORED_MESSAGES = self.colored

    def test_positioned_error_quotes_the_line(self):
        with self.assertRaises(util.ParseError) as caught:
            parser.parse("dim = 2\nkind = = pure\n", "rho.state")
        text = caught.exception.show()
        lines = text.splitlines()
        self.assertEqual(lines[:3], ["@", "ERROR", "====="])
        self.assertIn("    In rho.state:", lines)
        self.assertIn("  2 | kind = = pure", lines)
        self.assertIn("    |        ^", lines)
        self.assertIn("    |        invalid syntax", lines)
        self.assertEqual(lines[-1], "@")

    def test_plain_error(self):
        e = util.error("operator is not square", util.DimensionError, hints=["Check the rows."])
        text = e.show()
        self.assertIn("    operator is not square", text.splitlines())
        self.assertIn("    - Check the rows.", text.splitlines())
        self.assertEqual(e.plain(), "operator is not square")
        self.assertNotIn("\x1b[", text)

    def test_colors(self):
        util.COLORED_MESSAGES = True
        self.assertIn("\x1b[", util.error("bad").show())

    def test_exit_codes(self):
        self.assertEqual(util.error("bad").exit_code, 2)
        self.assertEqual(util.error("bad", util.ParseError).exit_code, 2)
        self.assertEqual(util.error("bad", util.UsageError).exit_code, 1)

    def test_covariance_error_keeps_residuals(self):
        e = util.NotCovariantError([(None, "not covariant")], residuals=[0.5])
        self.assertEqual(e.residuals, [0.5])
        self.assertEqual(e.exit_code, 2)

    def test_warnings(self):
        saved = util.SHOW_WARNINGS
        try:
            err = io.StringIO()
            with contextlib.redirect_stderr(err):
                util.SHOW_WARNINGS = True
                util.warn([(None, "operator is zero")])
                util.SHOW_WARNINGS = False
                util.warn([(None, "hidden")])
            self.assertIn("WARNING", err.getvalue())
            self.assertIn("operator is zero", err.getvalue())
            self.assertNotIn("hidden", err.getvalue())
        finally:
            util.SHOW_WARNINGS = saved

    def test_tolerances(self):
        self.assertEqual(util.tolerance(None), util.TOLERANCE)
        self.assertEqual(util.tolerance(1e-3), 1e-3)
        self.assertEqual(util.circuit_tolerance(None), util.CIRCUIT_TOLERANCE)


if __name__ == "__main__":
    unittest.main()
