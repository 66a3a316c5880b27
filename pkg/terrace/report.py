"""Report encoding for terrace

Reports are plain dicts built by the `as_dict()` methods of the result
classes; this module turns their values into JSON-safe form and renders
complete documents as JSON, markdown or CSV.

Exact rationals are written as ``{"num": "...", "den": "..."}`` with
decimal strings, so that no precision is lost; floats are written as
strings with 17 significant digits. JSON output is sorted by key, so the
same report always produces the same bytes.
"""
# terrace/report.py - JSON, markdown and CSV reports
#
# Copyright (C) 2026 The terrace developers
#
# terrace is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# terrace is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public
# License for more details.

import io
import csv
import json
import datetime
from fractions import Fraction

"""Version of the JSON document layout."""
SCHEMA_VERSION = 1


# value encoders

def rational_dict(x):
    """Encode an exact rational (or None)."""
    if x is None:
        return None
    x = Fraction(x)
    return {'num': str(x.numerator), 'den': str(x.denominator)}


def rational_from_dict(d):
    """Decode the output of `rational_dict()`."""
    if d is None:
        return None
    return Fraction(int(d['num']), int(d['den']))


def float_str(x):
    """Encode a float with 17 significant digits (or None)."""
    if x is None:
        return None
    return '%.17g' % float(x)


def interval_dict(iv):
    """Encode an `IntervalR`, with a float approximation of its midpoint."""
    if iv is None:
        return None
    return {
        'lo': rational_dict(iv.lo),
        'hi': rational_dict(iv.hi),
        'approx': float_str(iv.midpoint()),
    }


def interval_str(iv):
    if iv is None:
        return '-'
    return '[%.12g, %.12g]' % (float(iv.lo), float(iv.hi))


def poly_list(p):
    """Encode a `PolyQ` as its ascending list of rational coefficients."""
    if p is None:
        return None
    return [rational_dict(c) for c in p.coeffs]


# documents

def envelope(command, reports, timestamp=True, **extra):
    """Wrap a list of report dicts into the top level document."""
    from terrace import __version__
    rv = {
        'schema_version': SCHEMA_VERSION,
        'terrace_version': __version__,
        'command': command,
        'reports': reports,
    }
    if timestamp:
        rv['generated'] = datetime.datetime.now(
            datetime.timezone.utc).strftime('%Y-%m-%dT%H:%M:%SZ')
    rv.update(extra)
    return rv


def dumps(doc):
    """The canonical JSON text of a document."""
    return json.dumps(doc, sort_keys=True, indent=2,
        separators=(',', ': ')) + '\n'


def _q(d):
    # short human form of an encoded rational
    if d is None:
        return '-'
    q = rational_from_dict(d)
    if q.denominator == 1:
        return str(q.numerator)
    if len(str(q.denominator)) <= 6:
        return '%s (%.12g)' % (q, float(q))
    return '%.15g' % float(q)


def _iv(d):
    if d is None:
        return '-'
    lo = float(rational_from_dict(d['lo']))
    hi = float(rational_from_dict(d['hi']))
    if lo == hi:
        return '%.15g' % lo
    return '[%.15g, %.15g]' % (lo, hi)


def markdown_certify(doc):
    """Render a `CertReport` dict as markdown."""
    out = ["# %s: %s" % (doc['family'], doc['verdict']), ""]
    h = doc.get('hypothesis_checks')
    if h:
        out.append("## Hypotheses")
        out.append("")
        out.append("- a_0 = %s in (0, 1]: %s" % (_iv(h['a0']),
            h['a0_in_unit_interval']))
        out.append("- strictly decreasing: %s" % h['strictly_decreasing'])
        out.append("")

    if doc.get('prefix_results'):
        out.append("## Criterion on 0..%s" % doc['prefix_max'])
        out.append("")
        out.extend(_criterion_table(doc['prefix_results']))
        out.append("")

    tail = doc.get('tail')
    if tail:
        out.append("## Tail certificates")
        out.append("")
        for which in ('upper', 'lower'):
            t = tail[which]
            degree = len(t['reduced_numerator']) - 1
            out.append("- %s: `%s` -- %s, %s" % (
                t['schema'], t['identity'],
                t['valid'] and 'valid' or 'INVALID',
                degree < 0 and 'numerator zero'
                    or 'numerator degree %d' % degree))
            for lemma in t['majorant_lemmas']:
                out.append("  - `%s` (%s, %s): %s" % (lemma['bound'],
                    lemma['side'], lemma['rule'],
                    lemma['valid'] and 'valid' or 'INVALID'))
        out.append("")

    r = doc.get('refutation')
    if r:
        out.append("## Column refutation")
        out.append("")
        out.append("- |(M - I) e_0|^2 >= %s (threshold %s): %s" % (
            _q(r['column_norm_sq_lower']), _q(r['threshold']),
            r['refuted'] and 'refuted' or 'inconclusive'))
        for z in r['zeta_terms']:
            out.append("  - %s * zeta tail(%d) in %s" % (_q(z['coefficient']),
                z['exponent'], _iv(z['enclosure'])))
        for lemma in r.get('minorant_lemmas', ()):
            out.append("  - minorant `%s` (%s): %s" % (lemma['bound'],
                lemma['rule'], lemma['valid'] and 'valid' or 'INVALID'))
        out.append("")

    if doc.get('diagnostics'):
        out.append("## Diagnostics")
        out.append("")
        out.extend("- %s" % d for d in doc['diagnostics'])
        out.append("")
    return '\n'.join(out)


def _criterion_table(rows):
    out = ["| n | lower margin | lower | upper margin | upper |",
           "|---|---|---|---|---|"]
    for v in rows:
        out.append("| %d | %s | %s | %s | %s |" % (v['n'],
            _iv(v['lower_margin']), v['lower_check'],
            _iv(v['upper_margin']), v['upper_check']))
    return out


def markdown_table(doc):
    """Render the output of the table command as markdown."""
    out = ["# %s" % doc['family'], ""]
    for w in doc.get('warnings', ()):
        out.append("> warning: %s" % w)
        out.append("")
    out.append("| n | a_n | lower margin | lower | upper margin | upper |")
    out.append("|---|---|---|---|---|---|")
    for row in doc['rows']:
        out.append("| %d | %s | %s | %s | %s | %s |" % (row['n'],
            _iv(row['a_n']), _iv(row['lower_margin']), row['lower_check'],
            _iv(row['upper_margin']), row['upper_check']))
    return '\n'.join(out) + '\n'


def markdown_spectra(docs):
    """Render a list of `SpectrumReport` dicts as markdown."""
    if not docs:
        return ''
    out = ["# %s" % docs[0]['family'], "",
           "| N | min eigenvalue | residual | tail bracket | tag |",
           "|---|---|---|---|---|"]
    for d in docs:
        out.append("| %d | %s | %s | %s | %s |" % (d['N'],
            d['min_eigenvalue'], d['residual'], d['tail_bound_used'],
            d['tag']))
    w = docs[0].get('weighted_monotonicity')
    if w:
        out.append("")
        out.append("Weighted sequence (n+1) a_n up to %d: %s" % (
            w['n_max'], w['classification']))
    return '\n'.join(out) + '\n'


def csv_text(header, rows):
    """Render rows as CSV text with a header line."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
