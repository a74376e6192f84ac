"""Frozen multiprecision references (mpmath, 220 bits).

Generated by tools/gen_reference_fixtures.py; do not edit by hand.
"""

REFERENCES = [
    ("sin", (float.fromhex("0x1.0000000000000p+0"),), [("0x1.aed548f090ceep-1", "0x1.06374f484e288p-59")]),
    ("sin", (float.fromhex("0x1.0000000000000p-1"),), [("0x1.eaee8744b05f0p-2", "-0x1.789b43c9b027dp-58")]),
    ("sin", (float.fromhex("0x1.2a05f20000000p+33"),), [("-0x1.f334c7896a4e3p-2", "-0x1.332cd01b7d484p-56")]),
    ("sin", (float.fromhex("0x1.6ac5b262ca1ffp+849"),), [("0x1.0000000000000p+0", "-0x1.2b089ea1e692bp-123")]),
    ("sin", (float.fromhex("0x1.921fb54442d18p+1"),), [("0x1.1a62633145c07p-53", "-0x1.f1976b7ed8fbdp-109")]),
    ("cos", (float.fromhex("0x1.0000000000000p+0"),), [("0x1.14a280fb5068cp-1", "-0x1.b71edcc9344bcp-55")]),
    ("cos", (float.fromhex("0x1.4000000000000p+1"),), [("-0x1.9a2f7ef858b7dp-1", "-0x1.587cfaa17e973p-56")]),
    ("cos", (float.fromhex("0x1.921fb54442d18p+0"),), [("0x1.1a62633145c07p-54", "-0x1.f1976b7ed8fbcp-110")]),
    ("tan", (float.fromhex("0x1.3333333333333p+0"),), [("0x1.493c43acb164dp+1", "-0x1.767ad8ada14a2p-53")]),
    ("tan", (float.fromhex("-0x1.2cccccccccccdp+2"),), [("-0x1.42d9de890c6a9p+6", "0x1.4f57df0342984p-48")]),
    ("asin", (float.fromhex("0x1.6666666666666p-1"),), [("0x1.8d00e692afd95p-1", "0x1.3922d1ae3b05ep-55")]),
    ("asin", (float.fromhex("-0x1.fff2e48e8a71ep-1"),), [("-0x1.8e80e1a01556ap+0", "0x1.41330a56b5522p-54")]),
    ("acos", (float.fromhex("-0x1.3333333333333p-2"),), [("0x1.e0200bbc96ad8p+0", "-0x1.9130a13c6ea84p-56")]),
    ("acos", (float.fromhex("0x1.fffffbffffffcp-1"),), [("0x1.00000032aaaacp-11", "0x1.bdddec5c94c3bp-67")]),
    ("atan", (float.fromhex("0x1.d99999999999ap+1"),), [("0x1.4e8c94dbf54e5p+0", "-0x1.5104e61298f85p-54")]),
    ("atan", (float.fromhex("-0x1.5798ee2308c3ap-27"),), [("-0x1.5798ee2308c3ap-27", "0x1.9ca58cce0be35p-82")]),
    ("atan2", (float.fromhex("-0x1.4000000000000p+1"), float.fromhex("0x1.c000000000000p+0"),), [("-0x1.eb8e57b0c8583p-1", "-0x1.4c5d86ca9334ap-57")]),
    ("atan2", (float.fromhex("0x1.4484bfeebc2a0p-100"), float.fromhex("-0x1.0000000000000p+0"),), [("0x1.921fb54442d18p+1", "0x1.1a62633145bdep-53")]),
    ("exp", (float.fromhex("0x1.0000000000000p+0"),), [("0x1.5bf0a8b145769p+1", "0x1.4d57ee2b1013ap-53")]),
    ("exp", (float.fromhex("-0x1.9200000000000p+5"),), [("0x1.6b30390494d8ep-73", "0x1.ac52a90590679p-130")]),
    ("exp", (float.fromhex("0x1.5e0cccccccccdp+9"),), [("0x1.058614179b2a5p+1010", "-0x1.c9dfb9b17c3c0p+956")]),
    ("log", (float.fromhex("0x1.d000000000000p+2"),), [("0x1.fb22e98a1c24ep+0", "0x1.1550131db6cfbp-54")]),
    ("log", (float.fromhex("0x1.0000000400000p+0"),), [("0x1.fffffffc00000p-31", "0x1.5555555155555p-92")]),
    ("log", (float.fromhex("0x1.56e1fc2f8f359p-997"),), [("-0x1.5963447f87fb5p+9", "-0x1.aa670d35324e6p-46")]),
    ("log2", (float.fromhex("0x1.4000000000000p+3"),), [("0x1.a934f0979a371p+1", "0x1.7f2495fb7fa6dp-53")]),
    ("log2", (float.fromhex("0x1.6666666666666p-1"),), [("-0x1.0776228967d13p-1", "0x1.43511d11de4d9p-57")]),
    ("log10", (float.fromhex("0x1.81cd6c8b43958p+13"),), [("0x1.05db618083a9ep+2", "-0x1.e95dc88960540p-52")]),
    ("pow", (float.fromhex("0x1.4000000000000p+1"), float.fromhex("0x1.a000000000000p+1"),), [("0x1.3a5bbd4fda54bp+4", "-0x1.dbe0f33ef633ep-55")]),
    ("pow", (float.fromhex("0x1.000001ad7f29bp+0"), float.fromhex("0x1.81c8000000000p+13"),), [("0x1.0050f442f4b3dp+0", "0x1.2f40f16b5ee4bp-56")]),
    ("pow", (float.fromhex("0x1.0000000000000p+1"), float.fromhex("0x1.0000000000000p-1"),), [("0x1.6a09e667f3bcdp+0", "-0x1.bdd3413b26456p-54")]),
    ("sqrt", (float.fromhex("0x1.0000000000000p+1"),), [("0x1.6a09e667f3bcdp+0", "-0x1.bdd3413b26456p-54")]),
    ("sqrt", (float.fromhex("0x1.e3d04fad13ab6p-665"),), [("0x1.f1b515f5353d2p-333", "-0x1.1a70bcf90feb4p-389")]),
    ("cbrt", (float.fromhex("0x1.1000000000000p+4"),), [("0x1.491fc152578cap+1", "0x1.f37601e3f6bf3p-53")]),
    ("cbrt", (float.fromhex("-0x1.1000000000000p+4"),), [("-0x1.491fc152578cap+1", "-0x1.f37601e3f6bf3p-53")]),
    ("hypot", (float.fromhex("0x1.f5aa543c31387p+665"), float.fromhex("0x1.4e718d7d7625ap+666"),), [("0x1.a20df0dcd3af0p+666", "0x1.0000000000000p+613")]),
    ("hypot", (float.fromhex("0x1.25eed8ffb39c1p-664"), float.fromhex("-0x1.e9e369aa2b597p-664"),), [("0x1.1da6ca9e9b176p-663", "-0x1.3a87e83d28502p-717")]),
    ("sincos", (float.fromhex("0x1.0000000000000p-1"),), [("0x1.eaee8744b05f0p-2", "-0x1.789b43c9b027dp-58"), ("0x1.c1528065b7d50p-1", "-0x1.892111312e828p-55")]),
    ("fabs", (float.fromhex("-0x1.c000000000000p+1"),), [("0x1.c000000000000p+1", "0x0.0p+0")]),
    ("floor", (float.fromhex("0x1.6000000000000p+1"),), [("0x1.0000000000000p+1", "0x0.0p+0")]),
    ("floor", (float.fromhex("-0x1.2000000000000p+1"),), [("-0x1.8000000000000p+1", "0x0.0p+0")]),
    ("ceil", (float.fromhex("-0x1.2000000000000p+1"),), [("-0x1.0000000000000p+1", "0x0.0p+0")]),
    ("fmod", (float.fromhex("0x1.e000000000000p+2"), float.fromhex("0x1.2000000000000p+1"),), [("0x1.8000000000000p-1", "0x0.0p+0")]),
]
