import os
import shutil
import tempfile
import unittest
import numpy as np
from quorum import compiler, formats, linalg, parser, programs, util, wigner


class ParserTest(unittest.TestCase):

    def test_fields_and_rows(self):
        fixture = parser.parse("# comment\ndim = 3\nkind = pure  # trailing\n\n1,0 0 -2.5e-3,1\n", "a.state")
        self.assertEqual(fixture.field("dim").as_int(), 3)
        self.assertEqual(fixture.field("kind").as_name(), "pure")
        self.assertEqual(len(fixture.rows), 1)
        self.assertEqual([entry.as_complex() for entry in fixture.rows[0].entries], [1, 0, -2.5e-3 + 1j])

    def test_position(self):
        fixture = parser.parse("dim = 2\n  3 4\n", "b.state")
        (line, col), end, src, file = fixture.rows[0].pos
        self.assertEqual((line, col), (1, 2))
        self.assertEqual(src, "  3 4")
        self.assertEqual(file, "b.state")

    def test_missing_trailing_newline(self):
        self.assertEqual(parser.parse("dim = 2").field("dim").as_int(), 2)

    def test_invalid_syntax(self):
        with self.assertRaises(util.ParseError) as caught:
            parser.parse("dim = = 2\n", "c.state")
        (file, pos, msg), = caught.exception.messages
        self.assertEqual(file, "c.state")
        self.assertEqual(pos[0][0], 0)

    def test_unexpected_character(self):
        with self.assertRaises(util.ParseError) as caught:
            parser.parse("dim = 2\n1 ; 2\n")
        (file, pos, msg), = caught.exception.messages
        self.assertEqual(pos[0], (1, 2))
        self.assertEqual(pos[2], "1 ; 2")
        self.assertEqual(msg, "unexpected character")

    def test_duplicate_field(self):
        with self.assertRaises(util.ParseError):
            parser.parse("dim = 2\ndim = 3\n")

    def test_missing_field(self):
        with self.assertRaises(util.ParseError) as caught:
            parser.parse("# nothing here\n", "empty.state").field("dim")
        self.assertIn("missing field 'dim'", caught.exception.plain())

    def test_wrong_value_types(self):
        fixture = parser.parse("dim = two\nkind = 3\n")
        with self.assertRaises(util.ParseError):
            fixture.field("dim").as_int()
        with self.assertRaises(util.ParseError):
            fixture.field("kind").as_name()
        with self.assertRaises(util.ParseError):
            parser.parse("x = 1.5\n").field("x").as_int()


class StateFormatTest(unittest.TestCase):

    def test_pure_state(self):
        state = formats.read_state("dim = 2\nkind = pure\n0.6,0\n0,0.8\n")
        self.assertEqual(state.kind, linalg.QuditState.PURE)
        self.assertTrue(linalg.allclose(state.data, [0.6, 0.8j]))

    def test_mixed_state_written_exactly(self):
        state = linalg.random_state(3, np.random.default_rng(70))
        again = formats.read_state(formats.write_state(state))
        self.assertTrue(np.array_equal(again.data, state.data))

    def test_pure_state_written_exactly(self):
        state = linalg.random_state(4, np.random.default_rng(71), rank=1)
        self.assertTrue(np.array_equal(formats.read_state(formats.write_state(state)).data, state.data))

    def test_errors(self):
        with self.assertRaises(util.ParseError):
            formats.read_state("", "empty.state")
        with self.assertRaises(util.ParseError):
            formats.read_state("dim = 2\nkind = thermal\n1 0\n")
        with self.assertRaises(util.ParseError):
            formats.read_state("dim = 2\nkind = pure\n1\n")
        with self.assertRaises(util.ParseError):
            formats.read_state("dim = 2\nkind = mixed\n1 0\n")
        with self.assertRaises(util.InvalidStateError) as caught:
            formats.read_state("dim = 2\nkind = pure\n1 1\n", "f.state")
        self.assertEqual(caught.exception.messages[0][0], "f.state")


class OperatorFormatTest(unittest.TestCase):

    def test_coefficients(self):
        operator = formats.read_operator("dim = 3\nform = coeffs\n1 0 1.0 0.0\n2 2 -0.5 0.25\n")
        self.assertEqual(operator.data, {(1, 0): 1 + 0j, (2, 2): -0.5 + 0.25j})

    def test_matrix_written_exactly(self):
        rng = np.random.default_rng(72)
        operator = programs.OperatorSpec.from_matrix(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        again = formats.read_operator(formats.write_operator(operator))
        self.assertTrue(np.array_equal(again.data, operator.data))

    def test_coefficients_written_exactly(self):
        operator = programs.OperatorSpec.from_coefficients(2, {(0, 1): 1 / 3 - 2j / 7, (1, 1): 1e-17})
        self.assertEqual(formats.read_operator(formats.write_operator(operator)).data, operator.data)

    def test_errors(self):
        with self.assertRaises(util.ParseError):
            formats.read_operator("dim = 2\nform = coeffs\n0 0 1\n")
        with self.assertRaises(util.ParseError):
            formats.read_operator("dim = 2\nform = coeffs\n2 0 1 0\n")
        with self.assertRaises(util.ParseError):
            formats.read_operator("dim = 2\nform = coeffs\n0 0 1 0\n0 0 2 0\n")
        with self.assertRaises(util.ParseError):
            formats.read_operator("dim = 2\nform = matrix\n1 0\n")
        with self.assertRaises(util.ParseError):
            formats.read_operator("dim = 1\nform = matrix\n1\n")


class DomainFormatTest(unittest.TestCase):

    def test_written_exactly(self):
        domain = wigner.difference(wigner.line(3, 1, 2), wigner.custom(3, [(0, 0)]))
        again = formats.read_domain(formats.write_domain(domain))
        self.assertEqual(again.signs, domain.signs)

    def test_descriptor_checks_points(self):
        text = formats.write_domain(wigner.line(2, 1, 0))
        self.assertEqual(formats.read_domain(text).signs, wigner.line(2, 1, 0).signs)
        with self.assertRaises(util.ParseError):
            formats.read_domain(text.replace("c = 0", "c = 2"))

    def test_descriptor_without_rows(self):
        domain = formats.read_domain("dim = 3\ndescriptor = vline\nq0 = 4\n")
        self.assertEqual(domain.points, [(4, p) for p in range(6)])

    def test_errors(self):
        with self.assertRaises(util.ParseError):
            formats.read_domain("dim = 2\ndescriptor = custom\n")
        with self.assertRaises(util.ParseError):
            formats.read_domain("dim = 2\ndescriptor = blob\n0 0 1\n")
        with self.assertRaises(util.ParseError):
            formats.read_domain("dim = 2\ndescriptor = custom\n0 0\n")
        with self.assertRaises(util.ParseError):
            formats.read_domain("dim = 2\ndescriptor = custom\n0 0 1\n0 0 -1\n")
        with self.assertRaises(util.DimensionError):
            formats.read_domain("dim = 2\ndescriptor = custom\n9 0 1\n")


class ProgramFormatTest(unittest.TestCase):

    def test_written_exactly(self):
        rng = np.random.default_rng(73)
        coefficients = {(q, p): value for (q, p), value in zip([(0, 0), (1, 2), (2, 1)], rng.normal(size=3))}
        ps = compiler.compile_program(coefficients, 3)
        again = formats.read_program(formats.write_program(ps))
        self.assertEqual((again.c, again.phi, again.scale, again.register_dim), (ps.c, ps.phi, ps.scale, ps.register_dim))

    def test_domain_program(self):
        ps = wigner.domain_program(wigner.vline(2, 3))
        again = formats.read_program(formats.write_program(ps))
        self.assertEqual(again.register_dim, 4)
        self.assertEqual(again.support(), ps.support())


class GridFormatTest(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_written_exactly(self):
        grid = wigner.wigner(linalg.random_state(3, np.random.default_rng(74)))
        text = formats.write_grid(grid)
        self.assertTrue(text.startswith("# dim = 3\n# convention = "))
        self.assertEqual(len(text.strip().splitlines()), 3 + 1 + 36)
        self.assertTrue(np.array_equal(formats.read_grid(text).values, grid.values))

    def test_incomplete_grid(self):
        text = formats.write_grid(wigner.wigner(linalg.QuditState.basis(2, 0)))
        with self.assertRaises(util.ParseError):
            formats.read_grid(text.rsplit("\n", 2)[0] + "\n")
        with self.assertRaises(util.ParseError):
            formats.read_grid("q,p,value\n")

    def assert_grid_error(self, text, line_number, fragment):
        with self.assertRaises(util.ParseError) as caught:
            formats.read_grid(text, "g.csv")
        (file, pos, msg), = caught.exception.messages
        self.assertEqual(file, "g.csv")
        self.assertEqual(pos[0][0], line_number)
        self.assertIn(fragment, msg)

    def test_malformed_lines(self):
        full = formats.write_grid(wigner.wigner(linalg.QuditState.basis(2, 0)))
        self.assert_grid_error("# dim = 2\nq,p,value\nx,0,1.0\n", 2, "integer")
        self.assert_grid_error("# dim = 2\nq,p,value\n0,0,high\n", 2, "integer")
        self.assert_grid_error("# dim = 2\nq,p,value\n0,0,nan\n", 2, "finite")
        self.assert_grid_error("# dim = 2\nq,p,value\n0,0\n", 2, "'q,p,value'")
        self.assert_grid_error("# dim = two\nq,p,value\n", 0, "not an integer")
        self.assert_grid_error(full + "-1,0,5.0\n", 20, "outside")
        self.assert_grid_error(full + "0,4,5.0\n", 20, "outside")
        self.assert_grid_error(full + "3,3,5.0\n", 20, "given twice")

    def test_store_and_load(self):
        path = os.path.join(self.dir, "grid.csv")
        text = formats.write_grid(wigner.wigner(linalg.QuditState.basis(2, 1)))
        formats.store(path, text)
        self.assertEqual(formats.load(path), text)
        with self.assertRaises(util.ParseError):
            formats.load(os.path.join(self.dir, "missing.csv"))
        with self.assertRaises(util.Error):
            formats.store(os.path.join(self.dir, "no", "such", "dir.csv"), text)


if __name__ == "__main__":
    unittest.main()
