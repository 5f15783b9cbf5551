"""Golden fixture: 75 chain-cycle weight systems and their transpose duals.

Each row lists a five-variable source weight vector (its degree is the weight
sum minus one), the primitively normalized dual weight vector, the dual
degree, the dual Milnor number and the dual torsion chain.  Dual weight
vectors are compared as multisets: coordinate order is a notational choice.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["FixtureRow", "ROWS"]


@dataclass(frozen=True)
class FixtureRow:
    source: tuple[int, int, int, int, int]
    dual: tuple[int, int, int, int, int]
    dual_degree: int
    dual_mu: int
    dual_torsion: tuple[int, ...]

    @property
    def source_degree(self) -> int:
        return sum(self.source) - 1


ROWS: tuple[FixtureRow, ...] = (
    FixtureRow((73, 73, 95, 45, 80), (219, 365, 420, 200, 260), 1460, 1224, (73,)),
    FixtureRow((73, 73, 105, 65, 50), (219, 365, 380, 320, 180), 1460, 1224, (73,)),
    FixtureRow((17, 34, 175, 125, 75), (187, 425, 1500, 2100, 900), 5100, 4624, (17,)),
    FixtureRow((67, 67, 161, 28, 147), (335, 469, 1302, 210, 504), 2814, 2442, (67,)),
    FixtureRow((67, 67, 217, 84, 35), (335, 469, 966, 882, 168), 2814, 2442, (67,)),
    FixtureRow((19, 57, 175, 100, 125), (133, 475, 1400, 1000, 800), 3800, 3474, (19,)),
    FixtureRow((118, 118, 185, 135, 35), (177, 295, 270, 370, 70), 1180, 1989, (590,)),
    FixtureRow((77, 77, 333, 180, 27), (539, 693, 1440, 2664, 216), 5544, 4940, (77,)),
    FixtureRow((253, 253, 545, 40, 175), (759, 1265, 2400, 260, 380), 5060, 4284, (253,)),
    FixtureRow((253, 253, 600, 95, 65), (759, 1265, 2180, 700, 160), 5060, 4284, (253,)),
    FixtureRow((113, 226, 715, 377, 39), (565, 1469, 2262, 4290, 234), 8814, 8176, (113,)),
    FixtureRow((64, 512, 475, 375, 175), (128, 1600, 1125, 1425, 525), 4800, 4599, (64,)),
    FixtureRow((127, 381, 559, 52, 533), (381, 1651, 3172, 260, 1144), 6604, 6174, (127,)),
    FixtureRow((127, 381, 793, 286, 65), (381, 1651, 2236, 2132, 208), 6604, 6174, (127,)),
    FixtureRow((373, 373, 780, 35, 305), (1119, 1865, 3620, 220, 640), 7460, 6324, (373,)),
    FixtureRow((373, 373, 905, 160, 55), (1119, 1865, 3120, 1220, 140), 7460, 6324, (373,)),
    FixtureRow((13, 143, 775, 620, 465), (169, 2015, 8680, 10850, 6510), 28210, 25884, (13,)),
    FixtureRow((701, 701, 381, 123, 198), (701, 2103, 786, 276, 342), 4206, 3500, (701,)),
    FixtureRow((701, 701, 393, 171, 138), (701, 2103, 762, 396, 246), 4206, 3500, (701,)),
    FixtureRow((17, 238, 889, 635, 381), (136, 2159, 5715, 8001, 3429), 19431, 18160, (17,)),
    FixtureRow((334, 668, 763, 525, 49), (668, 2338, 1575, 2289, 147), 7014, 6327, (334,)),
    FixtureRow((881, 881, 465, 99, 318), (881, 2643, 1014, 216, 534), 5286, 4400, (881,)),
    FixtureRow((881, 881, 507, 267, 108), (881, 2643, 930, 636, 198), 5286, 4400, (881,)),
    FixtureRow((73, 584, 1435, 779, 123), (292, 2993, 3895, 7175, 615), 14965, 14472, (73,)),
    FixtureRow((65, 650, 1581, 867, 153), (52, 663, 867, 1581, 153), 3315, 16064, (3315, 51, 51, 51)),
    FixtureRow((481, 962, 1519, 77, 329), (962, 3367, 4851, 399, 525), 10101, 9120, (481,)),
    FixtureRow((481, 962, 1617, 175, 133), (962, 3367, 4557, 987, 231), 10101, 9120, (481,)),
    FixtureRow((185, 740, 1911, 987, 63), (148, 777, 987, 1911, 63), 3885, 18584, (3885, 21, 21, 21)),
    FixtureRow((1331, 1331, 687, 87, 558), (1331, 3993, 1560, 186, 918), 7986, 6650, (1331,)),
    FixtureRow((1331, 1331, 780, 459, 93), (1331, 3993, 1374, 1116, 174), 7986, 6650, (1331,)),
    FixtureRow((29, 667, 1807, 1112, 417), (145, 4031, 6672, 10842, 2502), 24186, 23212, (29,)),
    FixtureRow((1457, 1457, 1011, 120, 327), (1457, 4371, 2112, 294, 510), 8742, 7280, (1457,)),
    FixtureRow((1457, 1457, 1056, 255, 147), (1457, 4371, 2022, 654, 240), 8742, 7280, (1457,)),
    FixtureRow((409, 2045, 1320, 187, 539), (409, 4499, 2838, 484, 770), 8998, 8568, (409,)),
    FixtureRow((409, 2045, 1419, 385, 242), (409, 4499, 2640, 1078, 374), 8998, 8568, (409,)),
    FixtureRow((43, 1333, 1875, 500, 1625), (129, 5375, 9500, 2500, 4000), 21500, 20874, (43,)),
    FixtureRow((43, 1333, 2375, 1000, 625), (129, 5375, 7500, 6500, 2000), 21500, 20874, (43,)),
    FixtureRow((2069, 2069, 1413, 102, 555), (2069, 6207, 3042, 246, 852), 12414, 10340, (2069,)),
    FixtureRow((2069, 2069, 1521, 426, 123), (2069, 6207, 2826, 1110, 204), 12414, 10340, (2069,)),
    FixtureRow((929, 1858, 2849, 63, 805), (1858, 6503, 1239, 9597, 315), 19509, 17632, (929,)),
    FixtureRow((929, 1858, 3199, 413, 105), (1858, 6503, 189, 8547, 2415), 19509, 17632, (929,)),
    FixtureRow((289, 2312, 2725, 125, 1775), (578, 7225, 2775, 10575, 525), 21675, 21024, (289,)),
    FixtureRow((289, 2312, 3525, 925, 175), (578, 7225, 375, 8175, 5325), 21675, 21024, (289,)),
    FixtureRow((1297, 3891, 2653, 119, 1120), (1297, 9079, 5950, 308, 1526), 18158, 16848, (1297,)),
    FixtureRow((1297, 3891, 2975, 763, 154), (1297, 9079, 5306, 2240, 238), 18158, 16848, (1297,)),
    FixtureRow((217, 4557, 2752, 731, 1075), (217, 9331, 5590, 1892, 1634), 18662, 18360, (217,)),
    FixtureRow((217, 4557, 2795, 817, 946), (217, 9331, 5504, 2150, 1462), 18662, 18360, (217,)),
    FixtureRow((49, 1862, 4393, 2483, 573), (196, 9359, 12415, 21965, 2865), 46795, 45648, (49,)),
    FixtureRow((3401, 3401, 2298, 93, 1011), (3401, 10203, 5046, 222, 1536), 20406, 17000, (3401,)),
    FixtureRow((3401, 3401, 2523, 768, 111), (3401, 10203, 4596, 2022, 186), 20406, 17000, (3401,)),
    FixtureRow((129, 3612, 4165, 425, 2635), (86, 3655, 5185, 595, 1445), 10965, 32384, (10965, 85)),
    FixtureRow((129, 3612, 5185, 1445, 595), (86, 3655, 4165, 2635, 425), 10965, 32384, (10965, 85)),
    FixtureRow((657, 3942, 4693, 95, 3097), (438, 4161, 6175, 133, 1577), 12483, 36080, (12483, 19)),
    FixtureRow((657, 3942, 6175, 1577, 133), (438, 4161, 4693, 3097, 95), 12483, 36080, (12483, 19)),
    FixtureRow((1135, 5675, 3476, 143, 2057), (1135, 12485, 8206, 352, 2794), 24970, 23814, (1135,)),
    # This row is the twin of the row above; the twin's dual tuple
    # (1135, 12485, 8206, 2794, 352) solves the transposed weight equation
    # for no representation of THIS source, so the dual recorded here is the
    # actual solution of A^T w = d (cross-checked against the closed forms).
    # Degree, Milnor number and torsion agree with the twin's, as they must.
    FixtureRow((1135, 5675, 4103, 1397, 176), (1135, 12485, 6952, 4114, 286), 24970, 23814, (1135,)),
    FixtureRow((1505, 6020, 3357, 2547, 117), (1505, 13545, 234, 5094, 6714), 27090, 25568, (1505,)),
    FixtureRow((3532, 7064, 5355, 115, 1595), (1766, 8830, 1075, 5835, 155), 17660, 31779, (17660,)),
    FixtureRow((3532, 7064, 5835, 1075, 155), (1766, 8830, 1595, 115, 5355), 17660, 31779, (17660,)),
    FixtureRow((141, 9729, 4031, 2224, 3475), (141, 19599, 8618, 4726, 6116), 39198, 38780, (141,)),
    FixtureRow((141, 9729, 4309, 3058, 2363), (141, 19599, 8062, 6950, 4448), 39198, 38780, (141,)),
    FixtureRow((113, 8362, 9589, 1115, 6021), (226, 25199, 35457, 4683, 10035), 75597, 74704, (113,)),
    FixtureRow((113, 8362, 11819, 3345, 1561), (226, 25199, 28767, 18063, 3345), 75597, 74704, (113,)),
    FixtureRow((1351, 12159, 6859, 209, 5092), (1351, 25669, 16948, 494, 6878), 51338, 49950, (1351,)),
    FixtureRow((1351, 12159, 8474, 3439, 247), (1351, 25669, 13718, 10184, 418), 51338, 49950, (1351,)),
    FixtureRow((177, 15399, 7175, 5950, 2275), (177, 30975, 11900, 14350, 4550), 61950, 61424, (177,)),
    FixtureRow((193, 18335, 10887, 3247, 4202), (193, 36863, 21774, 8404, 6494), 73726, 73152, (193,)),
    FixtureRow((2416, 19328, 10965, 187, 8177), (1208, 20536, 13617, 221, 5491), 41072, 79695, (41072,)),
    FixtureRow((2416, 19328, 13617, 5491, 221), (1208, 20536, 10965, 8177, 187), 41072, 79695, (41072,)),
    FixtureRow((217, 23219, 13115, 2795, 7310), (217, 46655, 28810, 6880, 10750), 93310, 92664, (217,)),
    FixtureRow((217, 23219, 14405, 5375, 3440), (217, 46655, 26230, 14620, 5590), 93310, 92664, (217,)),
    FixtureRow((316, 24648, 13345, 1727, 9577), (158, 24806, 15857, 2041, 6751), 49612, 98595, (49612,)),
    FixtureRow((316, 24648, 15857, 6751, 2041), (158, 24806, 13345, 9577, 1727), 49612, 98595, (49612,)),
    FixtureRow((301, 44849, 24219, 3289, 17342), (301, 89999, 57408, 7774, 24518), 179998, 179100, (301,)),
    FixtureRow((301, 44849, 28704, 12259, 3887), (301, 89999, 48438, 34684, 6578), 179998, 179100, (301,)),
)
