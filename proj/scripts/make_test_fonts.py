#!/usr/bin/env python3
"""Generate the bundled HFDGeo synthetic Hangul test fonts.

Writes a parametric family of TrueType fonts covering all 11,172 Hangul
syllables (U+AC00..U+D7A3) plus the 51 compatibility jamo (U+3131..U+3163).
Jamo glyphs are simple outlines built from geometric stroke primitives;
syllable blocks are composite glyphs that place initial/medial/final jamo
into geometry-dependent regions. Two extra fonts exercise toolkit edge
cases: one without compatibility-jamo cmap entries and one Latin-only.

Output is deterministic: fixed seeds, fixed timestamps. Regenerate with

    python3 scripts/make_test_fonts.py [--out assets/fonts]

Requires only the Python standard library; Pillow (if installed) is used
to validate that FreeType accepts every generated font.
"""

import argparse
import math
import random
import struct
import sys
from pathlib import Path

UPEM = 1000
# Block frame in font units: x in [40, 960], y in [-160, 780].
FRAME = (40.0, -160.0, 960.0, 780.0)
ASCENT, DESCENT = 800, -200
TTF_EPOCH = 3600000000  # constant creation/modification date

INITIAL_COMPAT = [0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141,
                  0x3142, 0x3143, 0x3145, 0x3146, 0x3147, 0x3148, 0x3149,
                  0x314A, 0x314B, 0x314C, 0x314D, 0x314E]
MEDIAL_COMPAT = list(range(0x314F, 0x3164))
FINAL_COMPAT = [None, 0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137,
                0x3139, 0x313A, 0x313B, 0x313C, 0x313D, 0x313E, 0x313F,
                0x3140, 0x3141, 0x3142, 0x3144, 0x3145, 0x3146, 0x3147,
                0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E]

# Medial geometry class per slot: r = right, d = right-double,
# b = below, c = below-right compound (single or double bar).
MEDIAL_CLASS = ['r', 'd', 'r', 'd', 'r', 'd', 'r', 'd', 'b', 'c', 'c', 'c',
                'b', 'b', 'c', 'c', 'c', 'b', 'b', 'c', 'r']


# ---------------------------------------------------------------------------
# Stroke primitives in the unit square (y up).

def rect(x0, y0, x1, y1):
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


def slanted(xt, xb, w, y0=0.0, y1=1.0):
    """Quadrilateral stroke from (xt, y1) down to (xb, y0), width w."""
    return [(xt - w / 2, y1), (xt + w / 2, y1), (xb + w / 2, y0), (xb - w / 2, y0)]


def ring(cx, cy, r_outer, r_inner, sides=12):
    outer, inner = [], []
    for k in range(sides):
        a = 2 * math.pi * (k + 0.5) / sides
        outer.append((cx + r_outer * math.cos(a), cy + r_outer * math.sin(a)))
        inner.append((cx + r_inner * math.cos(a), cy + r_inner * math.sin(a)))
    inner.reverse()  # hole winds the other way
    return [outer, inner]


def box_map(contours, bx0, by0, bx1, by1):
    """Map unit-square contours into the box (bx0,by0)-(bx1,by1)."""
    w, h = bx1 - bx0, by1 - by0
    return [[(bx0 + x * w, by0 + y * h) for (x, y) in c] for c in contours]


def consonant(shape, t):
    """Unit-square contours of one base consonant shape."""
    tk = t  # stroke thickness
    if shape == 'kiyeok':
        return [rect(0, 1 - tk, 1, 1), rect(1 - tk, 0, 1, 1)]
    if shape == 'nieun':
        return [rect(0, 0, tk, 1), rect(0, 0, 1, tk)]
    if shape == 'tikeut':
        return [rect(0, 0, tk, 1), rect(0, 0, 1, tk), rect(0, 1 - tk, 1, 1)]
    if shape == 'rieul':
        return [rect(0, 1 - tk, 1, 1), rect(1 - tk, 0.5 - tk / 2, 1, 1),
                rect(0, 0.5 - tk / 2, 1, 0.5 + tk / 2), rect(0, 0, tk, 0.5 + tk / 2),
                rect(0, 0, 1, tk)]
    if shape == 'mieum':
        return [rect(0, 0, tk, 1), rect(1 - tk, 0, 1, 1), rect(0, 1 - tk, 1, 1),
                rect(0, 0, 1, tk)]
    if shape == 'pieup':
        return [rect(0, 0, tk, 1), rect(1 - tk, 0, 1, 1),
                rect(0, 0.42 - tk / 2, 1, 0.42 + tk / 2), rect(0, 0, 1, tk)]
    if shape == 'sios':
        w = 1.3 * tk
        return [slanted(0.5, 0.06, w), slanted(0.5, 0.94, w)]
    if shape == 'ieung':
        return ring(0.5, 0.5, 0.5, max(0.5 - 1.1 * tk, 0.15))
    if shape == 'cieuc':
        w = 1.3 * tk
        return [rect(0, 1 - tk, 1, 1), slanted(0.5, 0.06, w, 0, 1 - tk),
                slanted(0.5, 0.94, w, 0, 1 - tk)]
    if shape == 'chieuch':
        w = 1.3 * tk
        cap = 1 - 2.2 * tk
        return [rect(0.5 - 0.9 * tk, 1 - tk, 0.5 + 0.9 * tk, 1),
                rect(0.04, cap, 0.96, cap + tk),
                slanted(0.5, 0.06, w, 0, cap), slanted(0.5, 0.94, w, 0, cap)]
    if shape == 'khieukh':
        return [rect(0, 1 - tk, 1, 1), rect(1 - tk, 0, 1, 1),
                rect(0, 0.5 - tk / 2, 1 - tk, 0.5 + tk / 2)]
    if shape == 'thieuth':
        return [rect(0, 0, tk, 1), rect(0, 0, 1, tk), rect(0, 1 - tk, 1, 1),
                rect(0, 0.5 - tk / 2, 1, 0.5 + tk / 2)]
    if shape == 'phieuph':
        return [rect(0, 1 - tk, 1, 1), rect(0, 0, 1, tk),
                rect(0.2, tk, 0.2 + tk, 1 - tk), rect(0.8 - tk, tk, 0.8, 1 - tk)]
    if shape == 'hieuh':
        cap = 1 - 2.2 * tk
        return ([rect(0.5 - 0.9 * tk, 1 - tk, 0.5 + 0.9 * tk, 1),
                 rect(0.04, cap, 0.96, cap + tk)] +
                box_map(ring(0.5, 0.5, 0.5, max(0.5 - 1.4 * tk, 0.15)),
                        0.12, 0.0, 0.88, cap - 0.04))
    raise KeyError(shape)


CONSONANT_ORDER = ['kiyeok', 'ssangkiyeok', 'kiyeok-sios', 'nieun', 'nieun-cieuc',
                   'nieun-hieuh', 'tikeut', 'ssangtikeut', 'rieul', 'rieul-kiyeok',
                   'rieul-mieum', 'rieul-pieup', 'rieul-sios', 'rieul-thieuth',
                   'rieul-phieuph', 'rieul-hieuh', 'mieum', 'pieup', 'ssangpieup',
                   'pieup-sios', 'sios', 'ssangsios', 'ieung', 'cieuc', 'ssangcieuc',
                   'chieuch', 'khieukh', 'thieuth', 'phieuph', 'hieuh']
# Compat consonant block U+3131..U+314E in order.
CONSONANT_BY_CP = dict(zip(range(0x3131, 0x314F), CONSONANT_ORDER))

PAIR_PARTS = {
    'ssangkiyeok': ('kiyeok', 'kiyeok'), 'ssangtikeut': ('tikeut', 'tikeut'),
    'ssangpieup': ('pieup', 'pieup'), 'ssangsios': ('sios', 'sios'),
    'ssangcieuc': ('cieuc', 'cieuc'), 'kiyeok-sios': ('kiyeok', 'sios'),
    'nieun-cieuc': ('nieun', 'cieuc'), 'nieun-hieuh': ('nieun', 'hieuh'),
    'rieul-kiyeok': ('rieul', 'kiyeok'), 'rieul-mieum': ('rieul', 'mieum'),
    'rieul-pieup': ('rieul', 'pieup'), 'rieul-sios': ('rieul', 'sios'),
    'rieul-thieuth': ('rieul', 'thieuth'), 'rieul-phieuph': ('rieul', 'hieuh'),
    'rieul-hieuh': ('rieul', 'hieuh'), 'pieup-sios': ('pieup', 'sios'),
}


def consonant_glyph(name, t):
    if name in PAIR_PARTS:
        a, b = PAIR_PARTS[name]
        # two parts side by side, slightly squeezed
        return (box_map(consonant(a, min(t * 1.6, 0.4)), 0.0, 0.0, 0.46, 1.0) +
                box_map(consonant(b, min(t * 1.6, 0.4)), 0.54, 0.0, 1.0, 1.0))
    return consonant(name, t)


def arm(orientation, nticks, t, tick_len):
    """Long bar with 1-2 perpendicular ticks, in the unit square."""
    cs = []
    if orientation == 'right':
        bar_x = 0.42
        cs.append(rect(bar_x, 0, bar_x + t, 1))
        ys = [0.5] if nticks == 1 else [0.32, 0.68]
        for y in ys:
            cs.append(rect(bar_x + t, y - t / 2, min(bar_x + t + tick_len, 1.0), y + t / 2))
    elif orientation == 'left':
        bar_x = 0.58 - t
        cs.append(rect(bar_x, 0, bar_x + t, 1))
        ys = [0.5] if nticks == 1 else [0.32, 0.68]
        for y in ys:
            cs.append(rect(max(bar_x - tick_len, 0.0), y - t / 2, bar_x, y + t / 2))
    elif orientation == 'up':
        bar_y = 0.38
        cs.append(rect(0, bar_y, 1, bar_y + t))
        xs = [0.5] if nticks == 1 else [0.32, 0.68]
        for x in xs:
            cs.append(rect(x - t / 2, bar_y + t, x + t / 2,
                           min(bar_y + t + tick_len, 1.0)))
    elif orientation == 'down':
        bar_y = 0.62 - t
        cs.append(rect(0, bar_y, 1, bar_y + t))
        xs = [0.5] if nticks == 1 else [0.32, 0.68]
        for x in xs:
            cs.append(rect(x - t / 2, max(bar_y - tick_len, 0.0), x + t / 2, bar_y))
    return cs


def vowel_glyph(slot, t, tick_len):
    """Unit-square contours of medial slot `slot` (0..20)."""
    tl = tick_len

    def bar_v(x):
        return rect(x, 0, x + t, 1)

    def tickpair(bar_x, to_x, ys):
        lo, hi = min(bar_x, to_x), max(bar_x, to_x)
        return [rect(lo, y - t / 2, hi, y + t / 2) for y in ys]

    if slot == 0:   # a
        return arm('right', 1, t, tl)
    if slot == 1:   # ae: bar, connecting tick, second bar
        return [bar_v(0.30)] + tickpair(0.30 + t, 0.72, [0.5]) + [bar_v(0.72)]
    if slot == 2:   # ya
        return arm('right', 2, t, tl)
    if slot == 3:   # yae
        return [bar_v(0.30)] + tickpair(0.30 + t, 0.72, [0.32, 0.68]) + [bar_v(0.72)]
    if slot == 4:   # eo
        return arm('left', 1, t, tl)
    if slot == 5:   # e
        return tickpair(0.04, 0.34, [0.5]) + [bar_v(0.34), bar_v(0.72)]
    if slot == 6:   # yeo
        return arm('left', 2, t, tl)
    if slot == 7:   # ye
        return tickpair(0.04, 0.34, [0.32, 0.68]) + [bar_v(0.34), bar_v(0.72)]
    if slot == 8:   # o
        return arm('up', 1, t, tl)
    if slot == 12:  # yo
        return arm('up', 2, t, tl)
    if slot == 13:  # u
        return arm('down', 1, t, tl)
    if slot == 17:  # yu
        return arm('down', 2, t, tl)
    if slot == 18:  # eu
        return [rect(0, 0.5 - t / 2, 1, 0.5 + t / 2)]
    if slot == 20:  # i
        return [rect(0.5 - t / 2, 0, 0.5 + t / 2, 1)]
    # below-right compounds: horizontal part lower-left, vertical part right
    hbox = (0.0, 0.08, 0.60, 0.52)
    vbox = (0.64, 0.0, 1.0, 1.0)
    comp = {9: (8, 0), 10: (8, 1), 11: (8, 20), 14: (13, 4), 15: (13, 5),
            16: (13, 20), 19: (18, 20)}
    h_slot, v_slot = comp[slot]
    th = min(t / (hbox[3] - hbox[1]), 0.35)  # keep stroke weight after squeeze
    tv = min(t / (vbox[2] - vbox[0]), 0.35)
    return (box_map(vowel_glyph(h_slot, th, tl), *hbox) +
            box_map(vowel_glyph(v_slot, tv, tl), *vbox))


# ---------------------------------------------------------------------------
# Block layout: regions of the frame per medial class. Regions are fixed per
# class (a final band is always reserved), so medial ink never moves with
# final presence.

REGIONS = {
    'r': {'I': (0.02, 0.40, 0.50, 0.98), 'M': (0.54, 0.28, 0.98, 0.98),
          'F': (0.02, 0.02, 0.56, 0.32)},
    'd': {'I': (0.02, 0.40, 0.44, 0.98), 'M': (0.48, 0.28, 0.98, 0.98),
          'F': (0.02, 0.02, 0.56, 0.32)},
    'b': {'I': (0.10, 0.66, 0.90, 0.98), 'M': (0.06, 0.34, 0.94, 0.62),
          'F': (0.10, 0.02, 0.90, 0.30)},
    'c': {'I': (0.02, 0.64, 0.50, 0.98), 'M': (0.04, 0.26, 0.98, 0.98),
          'F': (0.02, 0.02, 0.56, 0.24)},
}


# ---------------------------------------------------------------------------
# TrueType writer.

def pack_u32(v):
    return struct.pack('>I', v & 0xFFFFFFFF)


def table_checksum(data):
    if len(data) % 4:
        data = data + b'\0' * (4 - len(data) % 4)
    return sum(struct.unpack('>%dI' % (len(data) // 4), data)) & 0xFFFFFFFF


def f2dot14(v):
    iv = int(round(v * 16384))
    iv = max(-32768, min(32767, iv))
    return iv & 0xFFFF


class SimpleGlyph:
    def __init__(self, contours):
        # round to integer font units, drop degenerate contours
        self.contours = []
        for c in contours:
            pts = [(int(round(x)), int(round(y))) for (x, y) in c]
            if len(pts) >= 3:
                self.contours.append(pts)

    def bbox(self):
        xs = [p[0] for c in self.contours for p in c]
        ys = [p[1] for c in self.contours for p in c]
        if not xs:
            return (0, 0, 0, 0)
        return (min(xs), min(ys), max(xs), max(ys))

    def compile(self):
        if not self.contours:
            return b''
        x0, y0, x1, y1 = self.bbox()
        out = [struct.pack('>hhhhh', len(self.contours), x0, y0, x1, y1)]
        end = -1
        for c in self.contours:
            end += len(c)
            out.append(struct.pack('>H', end))
        out.append(struct.pack('>H', 0))  # no instructions
        npts = sum(len(c) for c in self.contours)
        out.append(b'\x01' * npts)  # all points on-curve, long coords
        prev = 0
        xs = b''.join(struct.pack('>h', p[0] - (prev, prev := p[0])[0])
                      for c in self.contours for p in c)
        out.append(xs)
        prev = 0
        ys = b''.join(struct.pack('>h', p[1] - (prev, prev := p[1])[0])
                      for c in self.contours for p in c)
        out.append(ys)
        return b''.join(out)


class CompositeGlyph:
    """Components: list of (glyph_id, a, b, c, d, dx, dy) applying
    x' = a x + c y + dx, y' = b x + d y + dy."""

    def __init__(self, components, bbox):
        self.components = components
        self._bbox = tuple(int(round(v)) for v in bbox)

    def bbox(self):
        return self._bbox

    def compile(self):
        x0, y0, x1, y1 = self._bbox
        out = [struct.pack('>hhhhh', -1, x0, y0, x1, y1)]
        for i, (gid, a, b, c, d, dx, dy) in enumerate(self.components):
            flags = 0x0001 | 0x0002 | 0x0004  # words, xy values, round to grid
            plain = abs(a - 1) < 1e-9 and abs(d - 1) < 1e-9
            shear = abs(b) > 1e-9 or abs(c) > 1e-9
            if shear:
                flags |= 0x0080  # two-by-two
            elif not plain:
                flags |= 0x0040  # x and y scale
            if i + 1 < len(self.components):
                flags |= 0x0020  # more components
            out.append(struct.pack('>HHhh', flags, gid, int(round(dx)), int(round(dy))))
            if shear:
                out.append(struct.pack('>HHHH', f2dot14(a), f2dot14(b), f2dot14(c),
                                       f2dot14(d)))
            elif not plain:
                out.append(struct.pack('>HH', f2dot14(a), f2dot14(d)))
        return b''.join(out)


def build_cmap(mapping):
    """Format 4 subtable from {codepoint: glyph_id}."""
    cps = sorted(mapping)
    segments = []
    i = 0
    while i < len(cps):
        j = i
        while (j + 1 < len(cps) and cps[j + 1] == cps[j] + 1 and
               mapping[cps[j + 1]] == mapping[cps[j]] + 1):
            j += 1
        segments.append((cps[i], cps[j], (mapping[cps[i]] - cps[i]) & 0xFFFF))
        i = j + 1
    segments.append((0xFFFF, 0xFFFF, 1))
    seg_count = len(segments)
    seg_count_x2 = seg_count * 2
    search_range = 2 ** int(math.floor(math.log2(seg_count))) * 2
    entry_selector = int(math.floor(math.log2(seg_count)))
    range_shift = seg_count_x2 - search_range
    sub = [struct.pack('>HHHHHHH', 4, 16 + 8 * seg_count, 0, seg_count_x2,
                       search_range, entry_selector, range_shift)]
    sub.append(b''.join(struct.pack('>H', s[1]) for s in segments))
    sub.append(b'\0\0')
    sub.append(b''.join(struct.pack('>H', s[0]) for s in segments))
    sub.append(b''.join(struct.pack('>H', s[2]) for s in segments))
    sub.append(b''.join(struct.pack('>H', 0) for _ in segments))
    subtable = b''.join(sub)
    header = struct.pack('>HH', 0, 1) + struct.pack('>HHI', 3, 1, 12)
    return header + subtable


def build_name(family, subfamily, version='1.0'):
    full = f'{family} {subfamily}'
    ps = f'{family}-{subfamily}'.replace(' ', '')
    records = [(1, family), (2, subfamily), (3, f'{family}-{subfamily}-{version}'),
               (4, full), (5, f'Version {version}'), (6, ps)]
    storage = b''
    entries = []
    for nid, text in records:
        data = text.encode('utf-16-be')
        entries.append(struct.pack('>HHHHHH', 3, 1, 0x409, nid, len(data),
                                   len(storage)))
        storage += data
    header = struct.pack('>HHH', 0, len(records), 6 + 12 * len(records))
    return header + b''.join(entries) + storage


def build_font(glyphs, cmap_map, family, subfamily, weight_class):
    """Assemble a TTF from glyph list (index = glyph id) and cmap mapping."""
    glyf_data = b''
    loca = [0]
    bboxes = []
    for g in glyphs:
        data = g.compile() if g is not None else b''
        if len(data) % 4:
            data += b'\0' * (4 - len(data) % 4)
        glyf_data += data
        loca.append(len(glyf_data))
        bboxes.append(g.bbox() if g is not None else (0, 0, 0, 0))

    num_glyphs = len(glyphs)
    xmins = [b[0] for b in bboxes]
    ymins = [b[1] for b in bboxes]
    xmaxs = [b[2] for b in bboxes]
    ymaxs = [b[3] for b in bboxes]
    fxmin, fymin = min(xmins), min(ymins)
    fxmax, fymax = max(xmaxs), max(ymaxs)

    advance = UPEM
    hmtx = b''.join(struct.pack('>Hh', advance, bboxes[i][0])
                    for i in range(num_glyphs))

    max_pts = max((sum(len(c) for c in g.contours)
                   for g in glyphs if isinstance(g, SimpleGlyph)), default=0)
    max_ctrs = max((len(g.contours)
                    for g in glyphs if isinstance(g, SimpleGlyph)), default=0)
    max_comp = max((len(g.components)
                    for g in glyphs if isinstance(g, CompositeGlyph)), default=0)

    head = struct.pack('>IIIIHHQQhhhhHHhhh',
                       0x00010000, 0x00010000, 0, 0x5F0F3CF5, 0x000B, UPEM,
                       TTF_EPOCH, TTF_EPOCH, fxmin, fymin, fxmax, fymax,
                       0, 8, 2, 1, 0)
    hhea = struct.pack('>IhhhHhhhhhhhhhhhH',
                       0x00010000, ASCENT, DESCENT, 0, advance,
                       min(xmins), min(advance - b[2] for b in bboxes),
                       max(xmaxs), 1, 0, 0, 0, 0, 0, 0, 0, num_glyphs)
    maxp = struct.pack('>IHHHHHHHHHHHHHH',
                       0x00010000, num_glyphs, max_pts, max_ctrs,
                       max_pts * 3, max_ctrs * 3, 2, 0, 0, 0, 0, 0, 0,
                       max(max_comp, 1), 1)
    cps = sorted(cmap_map)
    os2 = struct.pack('>HhHHHhhhhhhhhhhh', 4, advance, weight_class, 5, 0,
                      650, 600, 0, 75, 650, 600, 0, 350, 50, 300, 0)
    os2 += b'\0' * 10  # panose
    os2 += struct.pack('>IIII4sHHH', 0, 0, 0, 0, b'HFDT', 0x0040,
                       min(cps), min(max(cps), 0xFFFF))
    os2 += struct.pack('>hhhHH', ASCENT, DESCENT, 0, ASCENT, -DESCENT)
    os2 += struct.pack('>II', 0, 0)
    os2 += struct.pack('>hhHHH', 500, 700, 0, 32, 1)
    post = struct.pack('>IIhhIIIII', 0x00030000, 0, -100, 50, 0, 0, 0, 0, 0)

    loca_data = b''.join(pack_u32(off) for off in loca)
    tables = {
        'cmap': build_cmap(cmap_map),
        'glyf': glyf_data,
        'head': head,
        'hhea': hhea,
        'hmtx': hmtx,
        'loca': loca_data,
        'maxp': maxp,
        'name': build_name(family, subfamily),
        'OS/2': os2,
        'post': post,
    }

    tags = sorted(tables)
    num_tables = len(tags)
    search_range = 2 ** int(math.floor(math.log2(num_tables))) * 16
    entry_selector = int(math.floor(math.log2(num_tables)))
    range_shift = num_tables * 16 - search_range
    offset = 12 + 16 * num_tables
    directory = [struct.pack('>IHHHH', 0x00010000, num_tables, search_range,
                             entry_selector, range_shift)]
    body = b''
    head_offset = None
    for tag in tags:
        data = tables[tag]
        checksum = table_checksum(data)
        if tag == 'head':
            head_offset = offset + len(body)
        directory.append(struct.pack('>4sIII', tag.encode(), checksum,
                                     offset + len(body), len(data)))
        body += data
        if len(body) % 4:
            body += b'\0' * (4 - len(body) % 4)
    font = b''.join(directory) + body
    adjustment = (0xB1B0AFBA - table_checksum(font)) & 0xFFFFFFFF
    font = font[:head_offset + 8] + pack_u32(adjustment) + font[head_offset + 12:]
    return font


# ---------------------------------------------------------------------------
# Font family assembly.

class Style:
    def __init__(self, subfamily, t, weight_class, slant=0.0, xscale=1.0,
                 jitter=0.0, tick_len=0.34, scale=1.0, seed=0):
        self.subfamily = subfamily
        self.t = t
        self.weight_class = weight_class
        self.slant = slant
        self.xscale = xscale
        self.jitter = jitter
        self.tick_len = tick_len
        self.scale = scale
        self.seed = seed


STYLES = [
    Style('Thin', 0.07, 250, scale=0.96, seed=1),
    Style('Light', 0.10, 300, scale=1.00, seed=2),
    Style('Regular', 0.13, 400, scale=0.98, seed=3),
    Style('Medium', 0.16, 500, scale=1.00, seed=4),
    Style('Bold', 0.20, 700, scale=0.97, seed=5),
    Style('Black', 0.25, 900, scale=1.00, seed=6),
    Style('Oblique', 0.13, 400, slant=0.20, scale=0.98, seed=7),
    Style('Condensed', 0.13, 400, xscale=0.80, seed=8),
    Style('Round', 0.12, 400, jitter=0.016, tick_len=0.30, scale=0.99, seed=9),
    Style('Wide', 0.10, 400, tick_len=0.42, scale=0.93, seed=10),
]


def jamo_unit_contours(cp, style):
    if 0x3131 <= cp <= 0x314E:
        cs = consonant_glyph(CONSONANT_BY_CP[cp], style.t)
    else:
        cs = vowel_glyph(cp - 0x314F, style.t, style.tick_len)
    if style.jitter > 0:
        rng = random.Random(style.seed * 7919 + cp)
        cs = [[(x + rng.uniform(-style.jitter, style.jitter),
                y + rng.uniform(-style.jitter, style.jitter)) for (x, y) in c]
              for c in cs]
    return cs


def unit_to_frame(contours, style):
    fx0, fy0, fx1, fy1 = FRAME
    cx = (fx0 + fx1) / 2
    w = (fx1 - fx0) * style.scale * style.xscale
    h = (fy1 - fy0) * style.scale
    x0 = cx - w / 2
    y0 = fy0 + (fy1 - fy0 - h) / 2
    out = []
    for c in contours:
        pts = []
        for (x, y) in c:
            X = x0 + x * w
            Y = y0 + y * h
            X += style.slant * (Y - (fy0 + fy1) / 2)  # baked shear for standalone
            pts.append((X, Y))
        out.append(pts)
    return out


def region_transform(region, style, base_bbox):
    """Affine (a, b, c, d, dx, dy) placing the frame-drawn jamo glyph into a
    region of the frame. Shear (Oblique) goes through the 2x2 path."""
    fx0, fy0, fx1, fy1 = FRAME
    cx = (fx0 + fx1) / 2
    w = (fx1 - fx0) * style.scale * style.xscale
    h = (fy1 - fy0) * style.scale
    gx0 = cx - w / 2
    gy0 = fy0 + (fy1 - fy0 - h) / 2
    rx0, ry0, rx1, ry1 = region
    # region box in frame units
    RX0 = fx0 + rx0 * (fx1 - fx0)
    RX1 = fx0 + rx1 * (fx1 - fx0)
    RY0 = fy0 + ry0 * (fy1 - fy0)
    RY1 = fy0 + ry1 * (fy1 - fy0)
    sx = (RX1 - RX0) / w * style.xscale * style.scale
    sy = (RY1 - RY0) / h * style.scale
    # The standalone glyph includes baked slant; undoing it exactly is not
    # worth it for a test font, components simply scale the slanted outline.
    a, b, c, d = sx, 0.0, 0.0, sy
    dx = RX0 - gx0 * sx
    dy = RY0 - gy0 * sy
    xs = [base_bbox[0], base_bbox[2]]
    ys = [base_bbox[1], base_bbox[3]]
    corners = [(a * x + c * y + dx, b * x + d * y + dy) for x in xs for y in ys]
    bb = (min(p[0] for p in corners), min(p[1] for p in corners),
          max(p[0] for p in corners), max(p[1] for p in corners))
    return (a, b, c, d, dx, dy), bb


def make_hangul_font(style, with_jamo_cmap=True, family='HFDGeo'):
    glyphs = [SimpleGlyph([rect(100, 0, 900, 700), ring(500, 350, 280, 200)[1]]),
              None]  # .notdef, space
    cmap = {0x0020: 1}
    jamo_gid = {}
    for cp in range(0x3131, 0x3164):
        gid = len(glyphs)
        glyphs.append(SimpleGlyph(unit_to_frame(jamo_unit_contours(cp, style), style)))
        jamo_gid[cp] = gid
        if with_jamo_cmap:
            cmap[cp] = gid

    # per-font deterministic region tweaks
    rng = random.Random(style.seed)
    regions = {}
    for cls, slots in REGIONS.items():
        regions[cls] = {}
        for key, (x0, y0, x1, y1) in slots.items():
            e = 0.012
            regions[cls][key] = (x0 + rng.uniform(-e, e), y0 + rng.uniform(-e, e),
                                 x1 + rng.uniform(-e, e), y1 + rng.uniform(-e, e))

    base = 0xAC00
    for i in range(19):
        for m in range(21):
            for f in range(28):
                cp = base + (i * 21 + m) * 28 + f
                cls = MEDIAL_CLASS[m]
                comps = []
                bbs = []
                for key, jcp in (('I', INITIAL_COMPAT[i]), ('M', MEDIAL_COMPAT[m]),
                                 ('F', FINAL_COMPAT[f])):
                    if jcp is None:
                        continue
                    gid = jamo_gid[jcp]
                    tf, bb = region_transform(regions[cls][key], style,
                                              glyphs[gid].bbox())
                    comps.append((gid,) + tf)
                    bbs.append(bb)
                bbox = (min(b[0] for b in bbs), min(b[1] for b in bbs),
                        max(b[2] for b in bbs), max(b[3] for b in bbs))
                gid = len(glyphs)
                glyphs.append(CompositeGlyph(comps, bbox))
                cmap[cp] = gid
    return build_font(glyphs, cmap, family, style.subfamily, style.weight_class)


def make_latin_font():
    glyphs = [SimpleGlyph([rect(100, 0, 900, 700)]), None]
    cmap = {0x0020: 1}
    for k, cp in enumerate(range(0x41, 0x5B)):
        w = 0.3 + 0.6 * (k % 7) / 6
        g = SimpleGlyph(unit_to_frame([rect(0.1, 0, 0.1 + w * 0.8, 0.7),
                                       rect(0.2, 0.25, 0.6, 0.45)],
                                      STYLES[2]))
        cmap[cp] = len(glyphs)
        glyphs.append(g)
    return build_font(glyphs, cmap, 'HFDLatin', 'Regular', 400)


def validate_with_pillow(path, hangul=True):
    try:
        from PIL import ImageFont
    except ImportError:
        return 'pillow not installed, skipped'
    font = ImageFont.truetype(str(path), 24)
    text = '가' if hangul else 'A'
    mask = font.getmask(text, mode='L')
    w, h = mask.size
    ink = sum(1 for v in mask if v > 0)
    if ink == 0:
        raise RuntimeError(f'{path}: FreeType rendered no ink for {text!r}')
    return f'freetype ok, {text!r} -> {w}x{h}, {ink} ink px'


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--out', default='assets/fonts')
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for style in STYLES:
        data = make_hangul_font(style)
        path = out / f'HFDGeo-{style.subfamily}.ttf'
        path.write_bytes(data)
        print(f'{path} ({len(data)} bytes): {validate_with_pillow(path)}')

    nojamo = make_hangul_font(STYLES[2], with_jamo_cmap=False, family='HFDGeoNoJamo')
    path = out / 'HFDGeoNoJamo-Regular.ttf'
    path.write_bytes(nojamo)
    print(f'{path} ({len(nojamo)} bytes): {validate_with_pillow(path)}')

    latin = make_latin_font()
    path = out / 'HFDLatin-Regular.ttf'
    path.write_bytes(latin)
    print(f'{path} ({len(latin)} bytes): {validate_with_pillow(path, hangul=False)}')


if __name__ == '__main__':
    sys.exit(main())
