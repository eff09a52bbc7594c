"""Embedded wavelet filter tables.  Generated by tools/make_wavelet_tables.py;
do not edit by hand."""

# name -> (dec_lo, dec_hi, rec_lo, rec_hi)
FILTERS = {
    "db1": (
        (0.7071067811865476, 0.7071067811865476),
        (-0.7071067811865476, 0.7071067811865476),
        (0.7071067811865476, 0.7071067811865476),
        (0.7071067811865476, -0.7071067811865476),
    ),
    "db2": (
        (0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037),
        (0.12940952255126037, 0.2241438680420134, -0.8365163037378079, 0.48296291314453416),
        (-0.12940952255126037, 0.2241438680420134, 0.8365163037378079, 0.48296291314453416),
        (0.48296291314453416, -0.8365163037378079, 0.2241438680420134, 0.12940952255126037),
    ),
    "db3": (
        (0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458, -0.08544127388202666, 0.03522629188570953),
        (-0.03522629188570953, -0.08544127388202666, 0.13501102001025458, 0.45987750211849154, -0.8068915093110925, 0.33267055295008263),
        (0.03522629188570953, -0.08544127388202666, -0.13501102001025458, 0.45987750211849154, 0.8068915093110925, 0.33267055295008263),
        (0.33267055295008263, -0.8068915093110925, 0.45987750211849154, 0.13501102001025458, -0.08544127388202666, -0.03522629188570953),
    ),
    "db4": (
        (0.2303778133088965, 0.7148465705529157, 0.6308807679298589, -0.027983769416859854, -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032),
        (0.010597401785069032, 0.0328830116668852, -0.030841381835560764, -0.18703481171909309, 0.027983769416859854, 0.6308807679298589, -0.7148465705529157, 0.2303778133088965),
        (-0.010597401785069032, 0.0328830116668852, 0.030841381835560764, -0.18703481171909309, -0.027983769416859854, 0.6308807679298589, 0.7148465705529157, 0.2303778133088965),
        (0.2303778133088965, -0.7148465705529157, 0.6308807679298589, 0.027983769416859854, -0.18703481171909309, -0.030841381835560764, 0.0328830116668852, 0.010597401785069032),
    ),
    "db5": (
        (0.16010239797419293, 0.6038292697971896, 0.7243085284377729, 0.13842814590132074, -0.24229488706638203, -0.032244869584638375, 0.07757149384004572, -0.006241490212798274, -0.012580751999081999, 0.0033357252854737712),
        (-0.0033357252854737712, -0.012580751999081999, 0.006241490212798274, 0.07757149384004572, 0.032244869584638375, -0.24229488706638203, -0.13842814590132074, 0.7243085284377729, -0.6038292697971896, 0.16010239797419293),
        (0.0033357252854737712, -0.012580751999081999, -0.006241490212798274, 0.07757149384004572, -0.032244869584638375, -0.24229488706638203, 0.13842814590132074, 0.7243085284377729, 0.6038292697971896, 0.16010239797419293),
        (0.16010239797419293, -0.6038292697971896, 0.7243085284377729, -0.13842814590132074, -0.24229488706638203, 0.032244869584638375, 0.07757149384004572, 0.006241490212798274, -0.012580751999081999, -0.0033357252854737712),
    ),
    "db6": (
        (0.11154074335010947, 0.49462389039845306, 0.7511339080210954, 0.31525035170919763, -0.22626469396543983, -0.12976686756726194, 0.09750160558732304, 0.027522865530305727, -0.03158203931748603, 0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796),
        (0.0010773010853084796, 0.004777257510945511, -0.0005538422011614961, -0.03158203931748603, -0.027522865530305727, 0.09750160558732304, 0.12976686756726194, -0.22626469396543983, -0.31525035170919763, 0.7511339080210954, -0.49462389039845306, 0.11154074335010947),
        (-0.0010773010853084796, 0.004777257510945511, 0.0005538422011614961, -0.03158203931748603, 0.027522865530305727, 0.09750160558732304, -0.12976686756726194, -0.22626469396543983, 0.31525035170919763, 0.7511339080210954, 0.49462389039845306, 0.11154074335010947),
        (0.11154074335010947, -0.49462389039845306, 0.7511339080210954, -0.31525035170919763, -0.22626469396543983, 0.12976686756726194, 0.09750160558732304, -0.027522865530305727, -0.03158203931748603, -0.0005538422011614961, 0.004777257510945511, 0.0010773010853084796),
    ),
    "db7": (
        (0.07785205408500918, 0.3965393194819173, 0.7291320908462351, 0.4697822874051931, -0.14390600392856498, -0.22403618499387498, 0.07130921926683026, 0.08061260915108308, -0.03802993693501441, -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665, -0.0018016407040474908, 0.00035371379997452024),
        (-0.00035371379997452024, -0.0018016407040474908, -0.0004295779729213665, 0.01255099855609984, 0.01657454163066688, -0.03802993693501441, -0.08061260915108308, 0.07130921926683026, 0.22403618499387498, -0.14390600392856498, -0.4697822874051931, 0.7291320908462351, -0.3965393194819173, 0.07785205408500918),
        (0.00035371379997452024, -0.0018016407040474908, 0.0004295779729213665, 0.01255099855609984, -0.01657454163066688, -0.03802993693501441, 0.08061260915108308, 0.07130921926683026, -0.22403618499387498, -0.14390600392856498, 0.4697822874051931, 0.7291320908462351, 0.3965393194819173, 0.07785205408500918),
        (0.07785205408500918, -0.3965393194819173, 0.7291320908462351, -0.4697822874051931, -0.14390600392856498, 0.22403618499387498, 0.07130921926683026, -0.08061260915108308, -0.03802993693501441, 0.01657454163066688, 0.01255099855609984, -0.0004295779729213665, -0.0018016407040474908, -0.00035371379997452024),
    ),
    "db8": (
        (0.05441584224310401, 0.31287159091429995, 0.6756307362972898, 0.5853546836542067, -0.015829105256349306, -0.2840155429615469, 0.0004724845739132828, 0.12874742662047847, -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.008746094047405777, -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693, -0.00011747678412476953),
        (0.00011747678412476953, 0.0006754494064505693, 0.00039174037337694705, -0.004870352993451574, -0.008746094047405777, 0.013981027917398282, 0.044088253930794755, -0.017369301001807547, -0.12874742662047847, 0.0004724845739132828, 0.2840155429615469, -0.015829105256349306, -0.5853546836542067, 0.6756307362972898, -0.31287159091429995, 0.05441584224310401),
        (-0.00011747678412476953, 0.0006754494064505693, -0.00039174037337694705, -0.004870352993451574, 0.008746094047405777, 0.013981027917398282, -0.044088253930794755, -0.017369301001807547, 0.12874742662047847, 0.0004724845739132828, -0.2840155429615469, -0.015829105256349306, 0.5853546836542067, 0.6756307362972898, 0.31287159091429995, 0.05441584224310401),
        (0.05441584224310401, -0.31287159091429995, 0.6756307362972898, -0.5853546836542067, -0.015829105256349306, 0.2840155429615469, 0.0004724845739132828, -0.12874742662047847, -0.017369301001807547, 0.044088253930794755, 0.013981027917398282, -0.008746094047405777, -0.004870352993451574, 0.00039174037337694705, 0.0006754494064505693, 0.00011747678412476953),
    ),
    "sym2": (
        (-0.12940952255126037, 0.2241438680420134, 0.8365163037378079, 0.48296291314453416),
        (-0.48296291314453416, 0.8365163037378079, -0.2241438680420134, -0.12940952255126037),
        (0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037),
        (-0.12940952255126037, -0.2241438680420134, 0.8365163037378079, -0.48296291314453416),
    ),
    "sym3": (
        (0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458, -0.08544127388202666, 0.03522629188570953),
        (-0.03522629188570953, -0.08544127388202666, 0.13501102001025458, 0.45987750211849154, -0.8068915093110925, 0.33267055295008263),
        (0.03522629188570953, -0.08544127388202666, -0.13501102001025458, 0.45987750211849154, 0.8068915093110925, 0.33267055295008263),
        (0.33267055295008263, -0.8068915093110925, 0.45987750211849154, 0.13501102001025458, -0.08544127388202666, -0.03522629188570953),
    ),
    "sym4": (
        (-0.07576571478950221, -0.029635527646002493, 0.497618667632775, 0.8037387518051321, 0.29785779560530606, -0.09921954357663353, -0.012603967262031304, 0.032223100604051466),
        (-0.032223100604051466, -0.012603967262031304, 0.09921954357663353, 0.29785779560530606, -0.8037387518051321, 0.497618667632775, 0.029635527646002493, -0.07576571478950221),
        (0.032223100604051466, -0.012603967262031304, -0.09921954357663353, 0.29785779560530606, 0.8037387518051321, 0.497618667632775, -0.029635527646002493, -0.07576571478950221),
        (-0.07576571478950221, 0.029635527646002493, 0.497618667632775, -0.8037387518051321, 0.29785779560530606, 0.09921954357663353, -0.012603967262031304, -0.032223100604051466),
    ),
    "sym5": (
        (0.027333068344998768, 0.02951949092570626, -0.039134249302313844, 0.19939753397685558, 0.7234076904040407, 0.633978963456792, 0.01660210576451085, -0.17532808990805623, -0.021101834024689042, 0.019538882735249827),
        (-0.019538882735249827, -0.021101834024689042, 0.17532808990805623, 0.01660210576451085, -0.633978963456792, 0.7234076904040407, -0.19939753397685558, -0.039134249302313844, -0.02951949092570626, 0.027333068344998768),
        (0.019538882735249827, -0.021101834024689042, -0.17532808990805623, 0.01660210576451085, 0.633978963456792, 0.7234076904040407, 0.19939753397685558, -0.039134249302313844, 0.02951949092570626, 0.027333068344998768),
        (0.027333068344998768, -0.02951949092570626, -0.039134249302313844, -0.19939753397685558, 0.7234076904040407, -0.633978963456792, 0.01660210576451085, 0.17532808990805623, -0.021101834024689042, -0.019538882735249827),
    ),
    "sym6": (
        (-0.00780070832503238, 0.0017677118642540077, 0.04472490177078139, -0.02106029251237085, -0.07263752278637658, 0.3379294217281658, 0.787641141028651, 0.49105594192797375, -0.04831174258569806, -0.11799011114852002, 0.0034907120842221626, 0.015404109327044824),
        (-0.015404109327044824, 0.0034907120842221626, 0.11799011114852002, -0.04831174258569806, -0.49105594192797375, 0.787641141028651, -0.3379294217281658, -0.07263752278637658, 0.02106029251237085, 0.04472490177078139, -0.0017677118642540077, -0.00780070832503238),
        (0.015404109327044824, 0.0034907120842221626, -0.11799011114852002, -0.04831174258569806, 0.49105594192797375, 0.787641141028651, 0.3379294217281658, -0.07263752278637658, -0.02106029251237085, 0.04472490177078139, 0.0017677118642540077, -0.00780070832503238),
        (-0.00780070832503238, -0.0017677118642540077, 0.04472490177078139, 0.02106029251237085, -0.07263752278637658, -0.3379294217281658, 0.787641141028651, -0.49105594192797375, -0.04831174258569806, 0.11799011114852002, 0.0034907120842221626, -0.015404109327044824),
    ),
    "sym7": (
        (0.0022918339540537714, -0.003283297847466811, -0.01812660513133846, 0.020464207577546033, 0.04474234946835238, -0.1010109208684203, -0.05680447688966697, 0.4836109156822677, 0.7819215932917282, 0.3602184609062602, -0.06413128980738582, -0.06490800354718848, 0.017213376300804502, 0.012015419283549189),
        (-0.012015419283549189, 0.017213376300804502, 0.06490800354718848, -0.06413128980738582, -0.3602184609062602, 0.7819215932917282, -0.4836109156822677, -0.05680447688966697, 0.1010109208684203, 0.04474234946835238, -0.020464207577546033, -0.01812660513133846, 0.003283297847466811, 0.0022918339540537714),
        (0.012015419283549189, 0.017213376300804502, -0.06490800354718848, -0.06413128980738582, 0.3602184609062602, 0.7819215932917282, 0.4836109156822677, -0.05680447688966697, -0.1010109208684203, 0.04474234946835238, 0.020464207577546033, -0.01812660513133846, -0.003283297847466811, 0.0022918339540537714),
        (0.0022918339540537714, 0.003283297847466811, -0.01812660513133846, -0.020464207577546033, 0.04474234946835238, 0.1010109208684203, -0.05680447688966697, -0.4836109156822677, 0.7819215932917282, -0.3602184609062602, -0.06413128980738582, 0.06490800354718848, 0.017213376300804502, -0.012015419283549189),
    ),
    "sym8": (
        (0.001889950332767689, -0.0003029205147241331, -0.014952258337062199, 0.0038087520138944896, 0.04913717967373029, -0.027219029917103486, -0.0519458381078818, 0.36444189483617895, 0.777185751699628, 0.4813596512590534, -0.061273359067811076, -0.14329423835127267, 0.007607487324976609, 0.03169508781152599, -0.0005421323318000107, -0.0033824159510050028),
        (0.0033824159510050028, -0.0005421323318000107, -0.03169508781152599, 0.007607487324976609, 0.14329423835127267, -0.061273359067811076, -0.4813596512590534, 0.777185751699628, -0.36444189483617895, -0.0519458381078818, 0.027219029917103486, 0.04913717967373029, -0.0038087520138944896, -0.014952258337062199, 0.0003029205147241331, 0.001889950332767689),
        (-0.0033824159510050028, -0.0005421323318000107, 0.03169508781152599, 0.007607487324976609, -0.14329423835127267, -0.061273359067811076, 0.4813596512590534, 0.777185751699628, 0.36444189483617895, -0.0519458381078818, -0.027219029917103486, 0.04913717967373029, 0.0038087520138944896, -0.014952258337062199, -0.0003029205147241331, 0.001889950332767689),
        (0.001889950332767689, 0.0003029205147241331, -0.014952258337062199, -0.0038087520138944896, 0.04913717967373029, 0.027219029917103486, -0.0519458381078818, -0.36444189483617895, 0.777185751699628, -0.4813596512590534, -0.061273359067811076, 0.14329423835127267, 0.007607487324976609, -0.03169508781152599, -0.0005421323318000107, 0.0033824159510050028),
    ),
    "coif1": (
        (-0.015655728135791993, -0.07273261951252645, 0.3848648468648577, 0.8525720202116004, 0.33789766245748176, -0.07273261951252645),
        (0.07273261951252645, 0.33789766245748176, -0.8525720202116004, 0.3848648468648577, 0.07273261951252645, -0.015655728135791993),
        (-0.07273261951252645, 0.33789766245748176, 0.8525720202116004, 0.3848648468648577, -0.07273261951252645, -0.015655728135791993),
        (-0.015655728135791993, 0.07273261951252645, 0.3848648468648577, -0.8525720202116004, 0.33789766245748176, 0.07273261951252645),
    ),
    "coif2": (
        (-0.000720549445520347, -0.001823208870911032, 0.005611434819368834, 0.02368017194684777, -0.059434418646431085, -0.07648859907828076, 0.41700518442323903, 0.8127236354494135, 0.38611006682276283, -0.0673725547237256, -0.04146493678687178, 0.01638733646320364),
        (-0.01638733646320364, -0.04146493678687178, 0.0673725547237256, 0.38611006682276283, -0.8127236354494135, 0.41700518442323903, 0.07648859907828076, -0.059434418646431085, -0.02368017194684777, 0.005611434819368834, 0.001823208870911032, -0.000720549445520347),
        (0.01638733646320364, -0.04146493678687178, -0.0673725547237256, 0.38611006682276283, 0.8127236354494135, 0.41700518442323903, -0.07648859907828076, -0.059434418646431085, 0.02368017194684777, 0.005611434819368834, -0.001823208870911032, -0.000720549445520347),
        (-0.000720549445520347, 0.001823208870911032, 0.005611434819368834, -0.02368017194684777, -0.059434418646431085, 0.07648859907828076, 0.41700518442323903, -0.8127236354494135, 0.38611006682276283, 0.0673725547237256, -0.04146493678687178, -0.01638733646320364),
    ),
    "coif3": (
        (-3.4599773197272774e-05, -7.0983302506379e-05, 0.0004662169598204029, 0.0011175187708306303, -0.002574517688136797, -0.009007976136730624, 0.015880544863669452, 0.03455502757329773, -0.08230192710629981, -0.07179982161915484, 0.42848347637737, 0.7937772226260872, 0.4051769024091182, -0.06112339000297254, -0.06577191128146936, 0.023452696142077165, 0.0077825964256727454, -0.0037935128643808015),
        (0.0037935128643808015, 0.0077825964256727454, -0.023452696142077165, -0.06577191128146936, 0.06112339000297254, 0.4051769024091182, -0.7937772226260872, 0.42848347637737, 0.07179982161915484, -0.08230192710629981, -0.03455502757329773, 0.015880544863669452, 0.009007976136730624, -0.002574517688136797, -0.0011175187708306303, 0.0004662169598204029, 7.0983302506379e-05, -3.4599773197272774e-05),
        (-0.0037935128643808015, 0.0077825964256727454, 0.023452696142077165, -0.06577191128146936, -0.06112339000297254, 0.4051769024091182, 0.7937772226260872, 0.42848347637737, -0.07179982161915484, -0.08230192710629981, 0.03455502757329773, 0.015880544863669452, -0.009007976136730624, -0.002574517688136797, 0.0011175187708306303, 0.0004662169598204029, -7.0983302506379e-05, -3.4599773197272774e-05),
        (-3.4599773197272774e-05, 7.0983302506379e-05, 0.0004662169598204029, -0.0011175187708306303, -0.002574517688136797, 0.009007976136730624, 0.015880544863669452, -0.03455502757329773, -0.08230192710629981, 0.07179982161915484, 0.42848347637737, -0.7937772226260872, 0.4051769024091182, 0.06112339000297254, -0.06577191128146936, -0.023452696142077165, 0.0077825964256727454, 0.0037935128643808015),
    ),
    "coif4": (
        (-1.7849909144933466e-06, -3.2596479400307506e-06, 3.1229861599195265e-05, 6.233885431278718e-05, -0.0002599743371222568, -0.0005890202246332164, 0.0012665610789256603, 0.003751434697146086, -0.0056582838001308835, -0.015211728187697211, 0.025082253337949608, 0.03933442260558915, -0.09622042453595264, -0.06662747236681715, 0.43438603311435653, 0.7822389344242826, 0.41530842700068227, -0.05607731960356926, -0.08126671024919373, 0.026682304669604834, 0.016068947131575025, -0.00734616793626805, -0.0016294924252267858, 0.000892313902537003),
        (-0.000892313902537003, -0.0016294924252267858, 0.00734616793626805, 0.016068947131575025, -0.026682304669604834, -0.08126671024919373, 0.05607731960356926, 0.41530842700068227, -0.7822389344242826, 0.43438603311435653, 0.06662747236681715, -0.09622042453595264, -0.03933442260558915, 0.025082253337949608, 0.015211728187697211, -0.0056582838001308835, -0.003751434697146086, 0.0012665610789256603, 0.0005890202246332164, -0.0002599743371222568, -6.233885431278718e-05, 3.1229861599195265e-05, 3.2596479400307506e-06, -1.7849909144933466e-06),
        (0.000892313902537003, -0.0016294924252267858, -0.00734616793626805, 0.016068947131575025, 0.026682304669604834, -0.08126671024919373, -0.05607731960356926, 0.41530842700068227, 0.7822389344242826, 0.43438603311435653, -0.06662747236681715, -0.09622042453595264, 0.03933442260558915, 0.025082253337949608, -0.015211728187697211, -0.0056582838001308835, 0.003751434697146086, 0.0012665610789256603, -0.0005890202246332164, -0.0002599743371222568, 6.233885431278718e-05, 3.1229861599195265e-05, -3.2596479400307506e-06, -1.7849909144933466e-06),
        (-1.7849909144933466e-06, 3.2596479400307506e-06, 3.1229861599195265e-05, -6.233885431278718e-05, -0.0002599743371222568, 0.0005890202246332164, 0.0012665610789256603, -0.003751434697146086, -0.0056582838001308835, 0.015211728187697211, 0.025082253337949608, -0.03933442260558915, -0.09622042453595264, 0.06662747236681715, 0.43438603311435653, -0.7822389344242826, 0.41530842700068227, 0.05607731960356926, -0.08126671024919373, -0.026682304669604834, 0.016068947131575025, 0.00734616793626805, -0.0016294924252267858, -0.000892313902537003),
    ),
    "coif5": (
        (-9.604010112767892e-08, -1.6237995172048335e-07, 2.0612203985788783e-06, 3.7007277113394796e-06, -2.1270221672515614e-05, -4.12198619242655e-05, 0.00014035632812373243, 0.00030185794166824473, -0.0006375589261258812, -0.0016616273039298788, 0.0024315754425382886, 0.006761520220620417, -0.009159507338676163, -0.019758391600965465, 0.03267479946705735, 0.041287530472117834, -0.10556315130733723, -0.06203775157498195, 0.4379823066591633, 0.7742936228603274, 0.42157126673075435, -0.05204667025355476, -0.09192158806008609, 0.028169744270532353, 0.023408322118927783, -0.010131584846900275, -0.004159312627578639, 0.0021782943778456947, 0.0003585777411617577, -0.000212081862067494),
        (0.000212081862067494, 0.0003585777411617577, -0.0021782943778456947, -0.004159312627578639, 0.010131584846900275, 0.023408322118927783, -0.028169744270532353, -0.09192158806008609, 0.05204667025355476, 0.42157126673075435, -0.7742936228603274, 0.4379823066591633, 0.06203775157498195, -0.10556315130733723, -0.041287530472117834, 0.03267479946705735, 0.019758391600965465, -0.009159507338676163, -0.006761520220620417, 0.0024315754425382886, 0.0016616273039298788, -0.0006375589261258812, -0.00030185794166824473, 0.00014035632812373243, 4.12198619242655e-05, -2.1270221672515614e-05, -3.7007277113394796e-06, 2.0612203985788783e-06, 1.6237995172048335e-07, -9.604010112767892e-08),
        (-0.000212081862067494, 0.0003585777411617577, 0.0021782943778456947, -0.004159312627578639, -0.010131584846900275, 0.023408322118927783, 0.028169744270532353, -0.09192158806008609, -0.05204667025355476, 0.42157126673075435, 0.7742936228603274, 0.4379823066591633, -0.06203775157498195, -0.10556315130733723, 0.041287530472117834, 0.03267479946705735, -0.019758391600965465, -0.009159507338676163, 0.006761520220620417, 0.0024315754425382886, -0.0016616273039298788, -0.0006375589261258812, 0.00030185794166824473, 0.00014035632812373243, -4.12198619242655e-05, -2.1270221672515614e-05, 3.7007277113394796e-06, 2.0612203985788783e-06, -1.6237995172048335e-07, -9.604010112767892e-08),
        (-9.604010112767892e-08, 1.6237995172048335e-07, 2.0612203985788783e-06, -3.7007277113394796e-06, -2.1270221672515614e-05, 4.12198619242655e-05, 0.00014035632812373243, -0.00030185794166824473, -0.0006375589261258812, 0.0016616273039298788, 0.0024315754425382886, -0.006761520220620417, -0.009159507338676163, 0.019758391600965465, 0.03267479946705735, -0.041287530472117834, -0.10556315130733723, 0.06203775157498195, 0.4379823066591633, -0.7742936228603274, 0.42157126673075435, 0.05204667025355476, -0.09192158806008609, -0.028169744270532353, 0.023408322118927783, 0.010131584846900275, -0.004159312627578639, -0.0021782943778456947, 0.0003585777411617577, 0.000212081862067494),
    ),
    "bior1.1": (
        (0.7071067811865476, 0.7071067811865476),
        (0.7071067811865476, -0.7071067811865476),
        (0.7071067811865476, 0.7071067811865476),
        (-0.7071067811865476, 0.7071067811865476),
    ),
    "rbio1.1": (
        (0.7071067811865476, 0.7071067811865476),
        (0.7071067811865476, -0.7071067811865476),
        (0.7071067811865476, 0.7071067811865476),
        (-0.7071067811865476, 0.7071067811865476),
    ),
    "bior1.3": (
        (-0.08838834764831845, 0.08838834764831845, 0.7071067811865476, 0.7071067811865476, 0.08838834764831845, -0.08838834764831845),
        (0.0, 0.0, 0.7071067811865476, -0.7071067811865476, 0.0, 0.0),
        (0.0, 0.0, 0.7071067811865476, 0.7071067811865476, 0.0, 0.0),
        (0.08838834764831845, 0.08838834764831845, -0.7071067811865476, 0.7071067811865476, -0.08838834764831845, -0.08838834764831845),
    ),
    "rbio1.3": (
        (0.0, 0.0, 0.7071067811865476, 0.7071067811865476, 0.0, 0.0),
        (-0.08838834764831845, -0.08838834764831845, 0.7071067811865476, -0.7071067811865476, 0.08838834764831845, 0.08838834764831845),
        (-0.08838834764831845, 0.08838834764831845, 0.7071067811865476, 0.7071067811865476, 0.08838834764831845, -0.08838834764831845),
        (0.0, 0.0, -0.7071067811865476, 0.7071067811865476, 0.0, 0.0),
    ),
    "bior1.5": (
        (0.016572815184059706, -0.016572815184059706, -0.12153397801643785, 0.12153397801643785, 0.7071067811865476, 0.7071067811865476, 0.12153397801643785, -0.12153397801643785, -0.016572815184059706, 0.016572815184059706),
        (0.0, 0.0, 0.0, 0.0, 0.7071067811865476, -0.7071067811865476, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.7071067811865476, 0.7071067811865476, 0.0, 0.0, 0.0, 0.0),
        (-0.016572815184059706, -0.016572815184059706, 0.12153397801643785, 0.12153397801643785, -0.7071067811865476, 0.7071067811865476, -0.12153397801643785, -0.12153397801643785, 0.016572815184059706, 0.016572815184059706),
    ),
    "rbio1.5": (
        (0.0, 0.0, 0.0, 0.0, 0.7071067811865476, 0.7071067811865476, 0.0, 0.0, 0.0, 0.0),
        (0.016572815184059706, 0.016572815184059706, -0.12153397801643785, -0.12153397801643785, 0.7071067811865476, -0.7071067811865476, 0.12153397801643785, 0.12153397801643785, -0.016572815184059706, -0.016572815184059706),
        (0.016572815184059706, -0.016572815184059706, -0.12153397801643785, 0.12153397801643785, 0.7071067811865476, 0.7071067811865476, 0.12153397801643785, -0.12153397801643785, -0.016572815184059706, 0.016572815184059706),
        (0.0, 0.0, 0.0, 0.0, -0.7071067811865476, 0.7071067811865476, 0.0, 0.0, 0.0, 0.0),
    ),
    "bior2.2": (
        (0.0, -0.1767766952966369, 0.3535533905932738, 1.0606601717798212, 0.3535533905932738, -0.1767766952966369),
        (0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0),
        (0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0),
        (0.0, -0.1767766952966369, -0.3535533905932738, 1.0606601717798212, -0.3535533905932738, -0.1767766952966369),
    ),
    "rbio2.2": (
        (0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0),
        (-0.1767766952966369, -0.3535533905932738, 1.0606601717798212, -0.3535533905932738, -0.1767766952966369, 0.0),
        (-0.1767766952966369, 0.3535533905932738, 1.0606601717798212, 0.3535533905932738, -0.1767766952966369, 0.0),
        (0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0),
    ),
    "bior2.4": (
        (0.0, 0.03314563036811941, -0.06629126073623882, -0.1767766952966369, 0.4198446513295126, 0.9943689110435825, 0.4198446513295126, -0.1767766952966369, -0.06629126073623882, 0.03314563036811941),
        (0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.03314563036811941, 0.06629126073623882, -0.1767766952966369, -0.4198446513295126, 0.9943689110435825, -0.4198446513295126, -0.1767766952966369, 0.06629126073623882, 0.03314563036811941),
    ),
    "rbio2.4": (
        (0.0, 0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0),
        (0.03314563036811941, 0.06629126073623882, -0.1767766952966369, -0.4198446513295126, 0.9943689110435825, -0.4198446513295126, -0.1767766952966369, 0.06629126073623882, 0.03314563036811941, 0.0),
        (0.03314563036811941, -0.06629126073623882, -0.1767766952966369, 0.4198446513295126, 0.9943689110435825, 0.4198446513295126, -0.1767766952966369, -0.06629126073623882, 0.03314563036811941, 0.0),
        (0.0, 0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0),
    ),
    "bior2.6": (
        (0.0, -0.006905339660024878, 0.013810679320049757, 0.04695630968816917, -0.1077232986963881, -0.16987135563661201, 0.4474660099696121, 0.966747552403483, 0.4474660099696121, -0.16987135563661201, -0.1077232986963881, 0.04695630968816917, 0.013810679320049757, -0.006905339660024878),
        (0.0, 0.0, 0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, -0.006905339660024878, -0.013810679320049757, 0.04695630968816917, 0.1077232986963881, -0.16987135563661201, -0.4474660099696121, 0.966747552403483, -0.4474660099696121, -0.16987135563661201, 0.1077232986963881, 0.04695630968816917, -0.013810679320049757, -0.006905339660024878),
    ),
    "rbio2.6": (
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0),
        (-0.006905339660024878, -0.013810679320049757, 0.04695630968816917, 0.1077232986963881, -0.16987135563661201, -0.4474660099696121, 0.966747552403483, -0.4474660099696121, -0.16987135563661201, 0.1077232986963881, 0.04695630968816917, -0.013810679320049757, -0.006905339660024878, 0.0),
        (-0.006905339660024878, 0.013810679320049757, 0.04695630968816917, -0.1077232986963881, -0.16987135563661201, 0.4474660099696121, 0.966747552403483, 0.4474660099696121, -0.16987135563661201, -0.1077232986963881, 0.04695630968816917, 0.013810679320049757, -0.006905339660024878, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0),
    ),
    "bior2.8": (
        (0.0, 0.0015105430506304422, -0.0030210861012608843, -0.012947511862546647, 0.02891610982635418, 0.05299848189069094, -0.13491307360773605, -0.16382918343409023, 0.46257144047591653, 0.9516421218971786, 0.46257144047591653, -0.16382918343409023, -0.13491307360773605, 0.05299848189069094, 0.02891610982635418, -0.012947511862546647, -0.0030210861012608843, 0.0015105430506304422),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0015105430506304422, 0.0030210861012608843, -0.012947511862546647, -0.02891610982635418, 0.05299848189069094, 0.13491307360773605, -0.16382918343409023, -0.46257144047591653, 0.9516421218971786, -0.46257144047591653, -0.16382918343409023, 0.13491307360773605, 0.05299848189069094, -0.02891610982635418, -0.012947511862546647, 0.0030210861012608843, 0.0015105430506304422),
    ),
    "rbio2.8": (
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0015105430506304422, 0.0030210861012608843, -0.012947511862546647, -0.02891610982635418, 0.05299848189069094, 0.13491307360773605, -0.16382918343409023, -0.46257144047591653, 0.9516421218971786, -0.46257144047591653, -0.16382918343409023, 0.13491307360773605, 0.05299848189069094, -0.02891610982635418, -0.012947511862546647, 0.0030210861012608843, 0.0015105430506304422, 0.0),
        (0.0015105430506304422, -0.0030210861012608843, -0.012947511862546647, 0.02891610982635418, 0.05299848189069094, -0.13491307360773605, -0.16382918343409023, 0.46257144047591653, 0.9516421218971786, 0.46257144047591653, -0.16382918343409023, -0.13491307360773605, 0.05299848189069094, 0.02891610982635418, -0.012947511862546647, -0.0030210861012608843, 0.0015105430506304422, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    ),
    "bior3.1": (
        (-0.3535533905932738, 1.0606601717798212, 1.0606601717798212, -0.3535533905932738),
        (0.1767766952966369, -0.5303300858899106, 0.5303300858899106, -0.1767766952966369),
        (0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369),
        (0.3535533905932738, 1.0606601717798212, -1.0606601717798212, -0.3535533905932738),
    ),
    "rbio3.1": (
        (0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369),
        (-0.3535533905932738, -1.0606601717798212, 1.0606601717798212, 0.3535533905932738),
        (-0.3535533905932738, 1.0606601717798212, 1.0606601717798212, -0.3535533905932738),
        (-0.1767766952966369, 0.5303300858899106, -0.5303300858899106, 0.1767766952966369),
    ),
    "bior3.3": (
        (0.06629126073623882, -0.1988737822087165, -0.15467960838455727, 0.9943689110435825, 0.9943689110435825, -0.15467960838455727, -0.1988737822087165, 0.06629126073623882),
        (0.0, 0.0, 0.1767766952966369, -0.5303300858899106, 0.5303300858899106, -0.1767766952966369, 0.0, 0.0),
        (0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0),
        (-0.06629126073623882, -0.1988737822087165, 0.15467960838455727, 0.9943689110435825, -0.9943689110435825, -0.15467960838455727, 0.1988737822087165, 0.06629126073623882),
    ),
    "rbio3.3": (
        (0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0),
        (0.06629126073623882, 0.1988737822087165, -0.15467960838455727, -0.9943689110435825, 0.9943689110435825, 0.15467960838455727, -0.1988737822087165, -0.06629126073623882),
        (0.06629126073623882, -0.1988737822087165, -0.15467960838455727, 0.9943689110435825, 0.9943689110435825, -0.15467960838455727, -0.1988737822087165, 0.06629126073623882),
        (0.0, 0.0, -0.1767766952966369, 0.5303300858899106, -0.5303300858899106, 0.1767766952966369, 0.0, 0.0),
    ),
    "bior3.5": (
        (-0.013810679320049757, 0.04143203796014927, 0.052480581416189075, -0.26792717880896527, -0.07181553246425873, 0.966747552403483, 0.966747552403483, -0.07181553246425873, -0.26792717880896527, 0.052480581416189075, 0.04143203796014927, -0.013810679320049757),
        (0.0, 0.0, 0.0, 0.0, 0.1767766952966369, -0.5303300858899106, 0.5303300858899106, -0.1767766952966369, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0),
        (0.013810679320049757, 0.04143203796014927, -0.052480581416189075, -0.26792717880896527, 0.07181553246425873, 0.966747552403483, -0.966747552403483, -0.07181553246425873, 0.26792717880896527, 0.052480581416189075, -0.04143203796014927, -0.013810679320049757),
    ),
    "rbio3.5": (
        (0.0, 0.0, 0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0),
        (-0.013810679320049757, -0.04143203796014927, 0.052480581416189075, 0.26792717880896527, -0.07181553246425873, -0.966747552403483, 0.966747552403483, 0.07181553246425873, -0.26792717880896527, -0.052480581416189075, 0.04143203796014927, 0.013810679320049757),
        (-0.013810679320049757, 0.04143203796014927, 0.052480581416189075, -0.26792717880896527, -0.07181553246425873, 0.966747552403483, 0.966747552403483, -0.07181553246425873, -0.26792717880896527, 0.052480581416189075, 0.04143203796014927, -0.013810679320049757),
        (0.0, 0.0, 0.0, 0.0, -0.1767766952966369, 0.5303300858899106, -0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0),
    ),
    "bior3.7": (
        (0.0030210861012608843, -0.009063258303782653, -0.01683176542131064, 0.074663985074019, 0.03133297870736289, -0.301159125922835, -0.02649924094534547, 0.9516421218971786, 0.9516421218971786, -0.02649924094534547, -0.301159125922835, 0.03133297870736289, 0.074663985074019, -0.01683176542131064, -0.009063258303782653, 0.0030210861012608843),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1767766952966369, -0.5303300858899106, 0.5303300858899106, -0.1767766952966369, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (-0.0030210861012608843, -0.009063258303782653, 0.01683176542131064, 0.074663985074019, -0.03133297870736289, -0.301159125922835, 0.02649924094534547, 0.9516421218971786, -0.9516421218971786, -0.02649924094534547, 0.301159125922835, 0.03133297870736289, -0.074663985074019, -0.01683176542131064, 0.009063258303782653, 0.0030210861012608843),
    ),
    "rbio3.7": (
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1767766952966369, 0.5303300858899106, 0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        (0.0030210861012608843, 0.009063258303782653, -0.01683176542131064, -0.074663985074019, 0.03133297870736289, 0.301159125922835, -0.02649924094534547, -0.9516421218971786, 0.9516421218971786, 0.02649924094534547, -0.301159125922835, -0.03133297870736289, 0.074663985074019, 0.01683176542131064, -0.009063258303782653, -0.0030210861012608843),
        (0.0030210861012608843, -0.009063258303782653, -0.01683176542131064, 0.074663985074019, 0.03133297870736289, -0.301159125922835, -0.02649924094534547, 0.9516421218971786, 0.9516421218971786, -0.02649924094534547, -0.301159125922835, 0.03133297870736289, 0.074663985074019, -0.01683176542131064, -0.009063258303782653, 0.0030210861012608843),
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.1767766952966369, 0.5303300858899106, -0.5303300858899106, 0.1767766952966369, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    ),
}
