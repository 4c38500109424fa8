"""Printed expansions of the regular Pisot families (limit points psi_2 and chi).

Each branch maps a case to (greedy, lazy, comment).  A case is either an
explicit n or a residue class (slope, offset) meaning n = slope*k + offset.
``None`` marks "root bigger than 2".  Explicit rows take precedence.
"""

PSI2 = {
    "+A": {
        1: ("101", "00(1)^inf", ""),
        2: ("10101", "0(11101)^inf", ""),
        3: ("110001", "1010(1)^inf", ""),
        4: ("1100110001", "10(1111110011)^inf", ""),
        (3, 1): ("(110)^{k} 011(000)^{k} 1", "(110)^{k} 0(101)^{\\infty}", ""),
        (3, 2): ("1(101)^{k} 010(000)^{k} 1", "1(101)^{k} 0(011)^{\\infty}", ""),
        (3, 3): ("(110)^{k+1} 00(000)^{k} 1", "1(101)^{k} 0((110)^{k+1} 01(101)^{k} 1)^{\\infty}", ""),
    },
    "-A": {
        1: None,
        2: None,
        3: ("111(110)^inf", "111(110)^inf", "univoque"),
        4: ("111(0110)^inf", "111(0110)^inf", "univoque"),
        (3, 1): ("111(0(000)^{k-1} 110)^{\\infty}", "11(011)^{k-1} 1((011)^{k} 0)^{\\infty}", ""),
        (3, 2): ("111(00(000)^{k-1} 110)^{\\infty}", "11(011)^{k-1} 1001(101)^{k-1} 0111(11(011)^{k-1} 110)^{\\infty}", ""),
        (3, 3): ("111((000)^{k} 110)^{\\infty}", "11(011)^{k} 1(110)^{\\infty}", ""),
    },
    "+B": {
        1: ("10001", "0000(1)^inf", ""),
        2: ("11", "0(1)^inf", "periodic self-bracketed"),
        3: ("11001010011", "(1011110)^inf", ""),
        4: ("11010011001011", "110100(10111111)^inf", ""),
        (3, 1): ("1(101)^{k} 00(110)^{k} 0(101)^{k} 1", "(1(101)^{k} 00(110)^{k} 0(101)^{k} 0)^{\\infty}", "periodic self-bracketed"),
        (3, 2): ("1(101)^{k} 1", "(1(101)^{k} 0)^{\\infty}", "periodic self-bracketed"),
        (3, 3): ("(110)^{k+1} 0(101)^{k+1} 001(101)^{k} 1", "(110(110)^{k} 0(101)^{k+1} 001(101)^{k} 0)^{\\infty}", "periodic self-bracketed"),
    },
    "-B": {
        1: None,
        2: ("11111", "(11110)^inf", "periodic self-bracketed"),
        3: ("111011", "(111010)^inf", "periodic self-bracketed"),
        4: ("1110011", "(1110010)^inf", "periodic self-bracketed"),
        (3, 1): ("11100(000)^{k-1} 11", "(11(011)^{k-1} 1001(101)^{k-1} 0)^{\\infty}", ""),
        (3, 2): ("111(000)^{k} 11", "(11(011)^{k} 11(101)^{k} 0)^{\\infty}", ""),
        (3, 3): ("1110(000)^{k} 11", "(11(011)^{k} (101)^{k+1} 0)^{\\infty}", ""),
    },
}

CHI = {
    "+A": {
        1: ("1001001", "00(1111011)^inf", ""),
        2: ("11", "0(1)^inf", "periodic self-bracketed"),
        4: ("110110101001001011", "110110100(1)^inf", "periodic self-bracketed"),
        (2, 1): ("11(10)^{k-1} 01000(10)^{k-1} 0(00)^{k} 11", "11(10)^{k-1} 00(11)^{k} 00(1)^{\\infty}", ""),
        (2, 2): ("11(10)^{k-1} 0111000(10)^{k-2} 000010(00)^{k-1} 11", "11(10)^{k-1} 01101(11)^{k-1} 00(1)^{\\infty}", ""),
    },
    "-A": {
        1: None,
        2: None,
        3: None,
        5: ("1111(0001100)^inf", "1111000101111(0111100)^inf", ""),
        (2, 1): ("111(01)^{k-2} 1(00011(10)^{k-2} 00)^{\\infty}", "111(01)^{k-2} 100011(10)^{k-3} 0111011(1(01)^{k-3} 11111000)^{\\infty}", ""),
        (2, 2): ("111(01)^{k-1} 1011((10)^{k-1} 0111(01)^{k-1} 1000)^{\\infty}", "111(01)^{k-1} 1011((10)^{k-1} 0111(01)^{k-1} 1000)^{\\infty}", "univoque"),
    },
    "+B": {
        1: ("10001", "0000(1)^inf", ""),
        2: ("101000101", "0(1101)^inf", ""),
        3: ("11001", "10(11011)^inf", ""),
        4: ("110101(01100110000100)^inf", "110(1010110010110111)^inf", ""),
        5: ("1110001", "110(1110111)^inf", ""),
        (2, 1): ("11(10)^{k-1} 001", "1110((10)^{k-3} 01111)^{\\infty}", ""),
        (2, 2): ("11(10)^{k-1} 0101(1(10)^{k-2} (011)^2(10)^{k-2} 010^4100)^{\\infty}", "1110((10)^{k-2} 01011(10)^{k-2} (011)^2(10)^{k-2} 001^3(10)^{k-2} 01^4)^{\\infty}", ""),
    },
    "-B": {
        1: None,
        2: None,
        3: None,
        4: ("111111000001", "111110(1)^inf", "periodic self-bracketed"),
        5: ("1111001111000001", "111100(11101)^inf", ""),
        (2, 1): ("111(01)^{k-2} 101000(10)^{k-3} 011(1(00)^{k-1} 10)^{\\infty}", "111(01)^{k-2} 100(1(11)^{k-1} 01)^{\\infty}", ""),
        (2, 2): ("111(01)^{k-2} 100000(10)^{k-2} 001", "111(01)^{k-1} 110(1)^{\\infty}", ""),
    },
}

TABLES = {"psi2": PSI2, "chi": CHI}


def row_for(table: dict, n: int):
    """(case, row) used for n: the explicit row if present, else the residue row."""
    if n in table:
        return n, table[n]
    for case, row in table.items():
        if isinstance(case, tuple):
            slope, off = case
            if n >= off and (n - off) % slope == 0:
                return case, row
    raise KeyError(n)
