"""
Management Command: pjj

Exact computations on left pre-Jacobi-Jordan algebras from plain-text files.
Every report ends with `RESULT <key>=<value>` lines.

Exit codes: 0 the property holds or the computation succeeded, 1 a checked
property is false (the report and its witnesses are written first), 2 a
usage, I/O or parse error.

Usage:
    python manage.py pjj check A2.alg
    python manage.py pjj cohomology A2.alg --rep regular --degree 1
    python manage.py pjj build subadjacent A1.alg --out A1C.alg
    python manage.py pjj deform check A1.alg omega.cochain
    python manage.py pjj nijenhuis A1.alg idmap.map --trivial-deformation
    python manage.py pjj rota-baxter A1.alg idmap.map --weight -1
"""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from apps.algebras.axioms import check_axioms, is_jacobi_jordan, is_left_prejj
from apps.algebras.catalog import CATALOG, get_algebra
from apps.algebras.constructions import opposite, sub_adjacent, tensor_with_comm_assoc
from apps.cli.exceptions import FormatError
from apps.cli.formats import (
    parse_algebra,
    parse_cochain,
    parse_map,
    parse_representation,
    read_text,
    serialize_algebra,
    serialize_cochain,
    serialize_representation,
    write_text,
)
from apps.cli.rendering import Report
from apps.cohomology.complex import verify_zigzag
from apps.cohomology.groups import cohomology
from apps.deformations.linear import (
    check_deformation,
    check_equivalence,
    deformation_class,
    deformed_algebra,
)
from apps.deformations.operators import (
    deformed_product_N,
    nijenhuis_algebra_of_operators,
    nijenhuis_check,
    nijenhuis_trivial_deformation,
    rota_baxter_check,
    search_nijenhuis,
)
from apps.derivations.spaces import ANTIDERIVATION, DERIVATION, INNER_ANTIDERIVATION, space_of_kind
from apps.ratlinalg.exceptions import DimensionMismatch, PJJError
from apps.ratlinalg.scalars import parse_scalar
from apps.representations.constructions import (
    dual_representation,
    regular_representation,
    require_representation,
    scalar_representation,
    semidirect_product,
)

USAGE_ERRORS = (FormatError, OSError, DimensionMismatch)


class UsageParser(CommandParser):
    """Argument errors exit with status 2 under call_command too."""

    def error(self, message):
        if self.called_from_command_line:
            super().error(message)
        raise CommandError(f'Error: {message}', returncode=2)


# ============================================================================
# LOADING
# ============================================================================

def load_algebra(path):
    return parse_algebra(read_text(path))


def load_map(path):
    return parse_map(read_text(path))[1]


def load_cochain(path):
    return parse_cochain(read_text(path))


def load_representation(value, a, check=True):
    """`regular`, `scalar` or a representation file, validated unless check is False."""
    if value == 'regular':
        return regular_representation(a)
    if value == 'scalar':
        return scalar_representation(a)
    r = parse_representation(read_text(value), a)
    if check:
        require_representation(r)
    return r


def emit(text, out, report=None):
    """The serialized file goes to --out, or into the report itself."""
    report = report or Report()
    if out:
        write_text(out, text)
        report.line(f'wrote {out}')
    else:
        report.block(text)
    return report


def witness_cap(options):
    return 0 if options.get('verbose') else None


class Command(BaseCommand):
    help = 'Exact computations on left pre-Jacobi-Jordan algebras'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True, parser_class=UsageParser)

        catalog = actions.add_parser('catalog', help='Write a bundled algebra as an algebra file')
        catalog.add_argument('name', choices=sorted(CATALOG))
        catalog.add_argument('--out')

        check = actions.add_parser('check', help='Axiom report')
        check.add_argument('algebra')
        check.add_argument('--verbose', action='store_true', help='Print every witness')

        build = actions.add_parser('build', help='Constructions')
        constructions = build.add_subparsers(dest='construction', required=True, parser_class=UsageParser)
        for name in ('subadjacent', 'opposite'):
            p = constructions.add_parser(name)
            p.add_argument('algebra')
            p.add_argument('--out')
        for name, second in (('semidirect', 'rep'), ('dual', 'rep'), ('tensor', 'other')):
            p = constructions.add_parser(name)
            p.add_argument('algebra')
            p.add_argument(second)
            p.add_argument('--out')

        derivations = actions.add_parser('derivations', help='Derivation spaces')
        derivations.add_argument('algebra')
        derivations.add_argument('--rep', default='regular', help='regular, scalar or a representation file')
        derivations.add_argument('--anti', action='store_true')
        derivations.add_argument('--inner', action='store_true')

        groups = actions.add_parser('cohomology', help='Z^k, B^k and H^k')
        groups.add_argument('algebra')
        groups.add_argument('--rep', default='regular', help='regular, scalar or a representation file')
        groups.add_argument('--degree', type=int, required=True)
        groups.add_argument('--basis', action='store_true', help='Print the H^k representatives')
        groups.add_argument('--verify-zigzag', action='store_true')

        deform = actions.add_parser('deform', help='Linear deformations')
        steps = deform.add_subparsers(dest='step', required=True, parser_class=UsageParser)
        p = steps.add_parser('check')
        p.add_argument('algebra')
        p.add_argument('cochain')
        p.add_argument('--verbose', action='store_true')
        p = steps.add_parser('instantiate')
        p.add_argument('algebra')
        p.add_argument('cochain')
        p.add_argument('--t', type=parse_scalar, required=True)
        p.add_argument('--out')
        p = steps.add_parser('equiv')
        p.add_argument('algebra')
        p.add_argument('cochain')
        p.add_argument('cochain2')
        p.add_argument('map')
        p.add_argument('--verbose', action='store_true')
        p = steps.add_parser('class')
        p.add_argument('algebra')
        p.add_argument('cochain')

        nijenhuis = actions.add_parser('nijenhuis', help='Nijenhuis operators')
        nijenhuis.add_argument('algebra')
        nijenhuis.add_argument('map', nargs='?')
        nijenhuis.add_argument('--emit-deformed', action='store_true')
        nijenhuis.add_argument('--trivial-deformation', action='store_true')
        nijenhuis.add_argument('--search', action='store_true', help='Bounded search instead of a map')
        nijenhuis.add_argument('--verbose', action='store_true')

        rota_baxter = actions.add_parser('rota-baxter', help='Rota-Baxter operators')
        rota_baxter.add_argument('algebra')
        rota_baxter.add_argument('map')
        rota_baxter.add_argument('--weight', type=parse_scalar, required=True)
        rota_baxter.add_argument('--verbose', action='store_true')

    def handle(self, *args, **options):
        action = options['action']
        handler = getattr(self, 'handle_' + action.replace('-', '_'))
        try:
            report, holds = handler(options)
        except USAGE_ERRORS as exc:
            raise CommandError(str(exc), returncode=2) from exc
        except PJJError as exc:
            raise CommandError(str(exc), returncode=1) from exc
        self.stdout.write(report.render(), ending='')
        if not holds:
            raise CommandError(f'{action}: the checked property does not hold', returncode=1)

    # ========================================================================
    # SUBCOMMANDS
    # ========================================================================

    def handle_catalog(self, options):
        a = get_algebra(options['name'])
        report = emit(serialize_algebra(a), options.get('out'))
        report.result('dim', a.dim)
        return report, True

    def handle_check(self, options):
        a = load_algebra(options['algebra'])
        axioms = check_axioms(a, witness_cap=witness_cap(options))
        report = Report(f"Axioms of '{a.name}' (dim {a.dim})")
        for flag, value in axioms.flags().items():
            report.fact(flag, value)
        report.fact('jacobian product', axioms.jacobian_product)
        failing = [axiom for axiom, total in axioms.violations.items() if total]
        if failing:
            report.section('Witnesses')
            for axiom in failing:
                report.witnesses(axioms.witnesses_for(axiom), axioms.violations[axiom])
        for flag, value in axioms.flags().items():
            report.result(flag, value)
        report.result('jacobian_product', axioms.jacobian_product)
        return report, axioms.left_prejj

    def handle_build(self, options):
        a = load_algebra(options['algebra'])
        construction = options['construction']
        if construction == 'dual':
            dual = dual_representation(load_representation(options['rep'], a))
            report = emit(serialize_representation(dual), options.get('out'))
            report.result('repdim', dual.vdim)
            return report, True
        if construction == 'subadjacent':
            out = sub_adjacent(a)
        elif construction == 'opposite':
            out = opposite(a, check=True)
        elif construction == 'semidirect':
            out = semidirect_product(a, load_representation(options['rep'], a, check=False))
        else:
            out = tensor_with_comm_assoc(a, load_algebra(options['other']))
        report = emit(serialize_algebra(out), options.get('out'))
        report.result('dim', out.dim)
        report.result('left_prejj', is_left_prejj(out))
        report.result('jacobi_jordan', is_jacobi_jordan(out))
        return report, True

    def handle_derivations(self, options):
        a = load_algebra(options['algebra'])
        r = load_representation(options['rep'], a)
        kind = INNER_ANTIDERIVATION if options['inner'] else ANTIDERIVATION if options['anti'] else DERIVATION
        space = space_of_kind(r, kind)
        report = Report(f"{kind} space of '{a.name}' in '{r.name}'")
        report.fact('dim', space.dim)
        for number, d in enumerate(space.maps(), start=1):
            report.matrix(f'D{number}', d)
        report.result('kind', kind)
        report.result('dim', space.dim)
        return report, True

    def handle_cohomology(self, options):
        degree = options['degree']
        if not 0 <= degree <= settings.PJJ_MAX_DEGREE:
            raise CommandError(f'--degree must be in 0..{settings.PJJ_MAX_DEGREE}, got {degree}', returncode=2)
        a = load_algebra(options['algebra'])
        r = load_representation(options['rep'], a)
        groups = cohomology(r, degree)
        report = Report(f"H^{degree}('{a.name}', '{r.name}')")
        report.fact('dim Z', groups.dim_z)
        report.fact('dim B', groups.dim_b)
        report.fact('dim H', groups.dim_h)
        if options['basis']:
            report.section('Representatives')
            for number, rep in enumerate(groups.representatives, start=1):
                entries = ', '.join(f'{idx}={value}' for idx, value in rep.entries())
                report.line(f'  h{number}: {entries}')
        holds = True
        if options['verify_zigzag']:
            holds = all(verify_zigzag(r, n) for n in (degree, degree + 1) if n >= 1)
            report.fact('zigzag', holds)
        for key, value in groups.summary().items():
            report.result(key, value)
        if options['verify_zigzag']:
            report.result('zigzag', holds)
        return report, holds

    def handle_deform(self, options):
        a = load_algebra(options['algebra'])
        w = load_cochain(options['cochain'])
        step = options['step']
        if step == 'check':
            check = check_deformation(a, w, witness_cap(options))
            report = Report(f"Linear deformation of '{a.name}'")
            report.fact('2-cocycle', check.is_two_cocycle)
            report.fact('pre-Jacobi-Jordan square', check.is_prejj_square)
            report.witnesses(check.witnesses)
            report.result('is_two_cocycle', check.is_two_cocycle)
            report.result('is_prejj_square', check.is_prejj_square)
            report.result('generates', check.generates)
            return report, check.generates
        if step == 'instantiate':
            deformed = deformed_algebra(a, w, options['t'])
            report = emit(serialize_algebra(deformed), options.get('out'))
            report.result('t', options['t'])
            report.result('left_prejj', is_left_prejj(deformed))
            return report, True
        if step == 'equiv':
            n = load_map(options['map'])
            check = check_equivalence(a, w, load_cochain(options['cochain2']), n, witness_cap(options))
            report = Report(f"Equivalence of two deformations of '{a.name}'")
            for key in ('eq49', 'eq50', 'eq56'):
                report.fact(key, getattr(check, key))
            report.witnesses(check.witnesses)
            for key in ('eq49', 'eq50', 'eq56', 'equivalent'):
                report.result(key, getattr(check, key))
            return report, check.equivalent
        groups = cohomology(regular_representation(a), 2)
        coordinates = deformation_class(a, w, groups)
        report = Report(f"Class in H^2('{a.name}', '{a.name}')")
        report.fact('dim H2', groups.dim_h)
        report.fact('coordinates', coordinates)
        report.result('dimH2', groups.dim_h)
        report.result('class', coordinates)
        return report, True

    def handle_nijenhuis(self, options):
        a = load_algebra(options['algebra'])
        if options['search']:
            found = search_nijenhuis(a)
            report = Report(f"Nijenhuis operators on '{a.name}' over {settings.PJJ_SEARCH_ENTRIES}")
            for number, n in enumerate(found, start=1):
                report.matrix(f'N{number}', n)
            report.result('found', len(found))
            return report, True
        if not options['map']:
            raise CommandError('A map file is required unless --search is given', returncode=2)
        n = load_map(options['map'])
        check = nijenhuis_check(a, n, witness_cap(options))
        report = Report(f"Nijenhuis check on '{a.name}'")
        report.fact('nijenhuis', check.holds)
        report.witnesses(check.witnesses)
        report.result('nijenhuis', check.holds)
        if not check.holds:
            return report, False
        facts = nijenhuis_algebra_of_operators(a, n)
        for shift, ok in facts.shifts.items():
            report.fact(f'N + ({shift})Id nijenhuis', ok)
        if facts.nilpotent_equiv is not None:
            report.fact('N^2 = 0, rota-baxter weight 0', facts.nilpotent_equiv.rota_baxter)
        if facts.idempotent_equiv is not None:
            report.fact('N^2 = N, rota-baxter weight -1', facts.idempotent_equiv.rota_baxter)
        if options['emit_deformed']:
            report.section('Deformed product A_N')
            report.block(serialize_algebra(deformed_product_N(a, n)))
        if options['trivial_deformation']:
            trivial = nijenhuis_trivial_deformation(a, n)
            report.section('Trivial deformation w = delta^1 N')
            report.block(serialize_cochain(trivial.w))
            report.fact('generates', trivial.check.generates)
            report.fact('Id + tN morphism at t', [t for t, _ in trivial.samples])
            report.result('generates', trivial.check.generates)
            report.result('trivial', trivial.trivial)
        return report, True

    def handle_rota_baxter(self, options):
        a = load_algebra(options['algebra'])
        n = load_map(options['map'])
        check = rota_baxter_check(a, n, options['weight'], witness_cap(options))
        report = Report(f"Rota-Baxter check of weight {options['weight']} on '{a.name}'")
        report.fact('rota_baxter', check.holds)
        report.witnesses(check.witnesses)
        report.result('weight', options['weight'])
        report.result('rota_baxter', check.holds)
        return report, check.holds
