"""Reference classification values: Mabuchi constants and verdicts.

One row per isomorphism class of smooth toric Fano varieties in each
dimension, as (mabuchi constant, verdict token).  Row order follows the
published classification tables; the catalog pipeline only relies on the
multiset, since the tables do not carry vertex data.
"""

UPOLY = "uniformly_polystable"
UNSTABLE = "unstable"

REFERENCE_TABLES = {
    2: [
        ("0", UPOLY),
        ("0", UPOLY),
        ("5/11", UPOLY),
        ("304/409", UPOLY),
        ("0", UPOLY),
    ],
    3: [
        ("0", UPOLY),
        ("380/349", UNSTABLE),
        ("55/97", UPOLY),
        ("35/43", UPOLY),
        ("0", UPOLY),
        ("60/73", UPOLY),
        ("38/33", UNSTABLE),
        ("0", UPOLY),
        ("5/11", UPOLY),
        ("0", UPOLY),
        ("711861/467581", UNSTABLE),
        ("694595/650251", UNSTABLE),
        ("27195/19651", UNSTABLE),
        ("2936215/2735927", UNSTABLE),
        ("304/409", UPOLY),
        ("185791/394975", UPOLY),
        ("0", UPOLY),
        ("31/67", UPOLY),
    ],
    4: [
        ("0", UPOLY),
        ("186633/108133", UNSTABLE),
        ("1827/1577", UNSTABLE),
        ("62937/101357", UPOLY),
        ("0", UPOLY),
        ("81/71", UNSTABLE),
        ("5168/2803", UNSTABLE),
        ("5056/4961", UNSTABLE),
        ("1876/2921", UPOLY),
        ("0", UPOLY),
        ("3117506664/1528096589", UNSTABLE),
        ("1840195984/1038057499", UNSTABLE),
        ("8725985172/6541476757", UNSTABLE),
        ("11387/8057", UNSTABLE),
        ("2344247/1129107", UNSTABLE),
        ("23933079/13920179", UNSTABLE),
        ("10601177/5141177", UNSTABLE),
        ("380/349", UNSTABLE),
        ("1818/1973", UPOLY),
        ("748/523", UNSTABLE),
        ("3165248067/2130145727", UNSTABLE),
        ("1380/1177", UNSTABLE),
        ("18353/11683", UNSTABLE),
        ("1727/1007", UNSTABLE),
        ("55/97", UPOLY),
        ("0", UPOLY),
        ("35/43", UPOLY),
        ("5/11", UPOLY),
        ("1046933/1061921", UPOLY),
        ("59/134", UPOLY),
        ("3927/5177", UPOLY),
        ("238/1613", UPOLY),
        ("29663642268/16641653953", UNSTABLE),
        ("372321328/163900203", UNSTABLE),
        ("2130146436/1907713037", UNSTABLE),
        ("91293727706236/48057952407691", UNSTABLE),
        ("7423814976/5976434111", UNSTABLE),
        ("6431616/4388521", UNSTABLE),
        ("391552/172227", UNSTABLE),
        ("23712381468/12261327193", UNSTABLE),
        ("1551503556/999563887", UNSTABLE),
        ("173016/111181", UNSTABLE),
        ("9770225016/8410595791", UNSTABLE),
        ("7892183028/6776874793", UNSTABLE),
        ("2510023476/2191715291", UNSTABLE),
        ("304/409", UPOLY),
        ("3339308412/5523943807", UPOLY),
        ("33344/116609", UPOLY),
        ("1827/1577", UNSTABLE),
        ("4491311/2637399", UNSTABLE),
        ("29551791/20356871", UNSTABLE),
        ("12523717673/6291985913", UNSTABLE),
        ("60/73", UPOLY),
        ("38/33", UNSTABLE),
        ("10/11", UPOLY),
        ("0", UPOLY),
        ("5/11", UPOLY),
        ("11999/15439", UPOLY),
        ("0", UPOLY),
        ("98007/118907", UPOLY),
        ("93/203", UPOLY),
        ("708660642/298795537", UNSTABLE),
        ("3024970758/1752843533", UNSTABLE),
        ("1265748565401/557417025511", UNSTABLE),
        ("94549671/42931741", UNSTABLE),
        ("11713596999245802/6984760752795427", UNSTABLE),
        ("448243263/230998253", UNSTABLE),
        ("711861/467581", UNSTABLE),
        ("3126600189529/1577014856729", UNSTABLE),
        ("51542252/31553027", UNSTABLE),
        ("1376202783/1008086248", UNSTABLE),
        ("13278385/7524593", UNSTABLE),
        ("3762595665/10127095471", UPOLY),
        ("694595/650251", UNSTABLE),
        ("211431316083/218756440813", UPOLY),
        ("949610187/739116617", UNSTABLE),
        ("4575996/2853121", UNSTABLE),
        ("9794436236/4944865931", UNSTABLE),
        ("25645181180008/16440690503203", UNSTABLE),
        ("19189680326248/13060549547443", UNSTABLE),
        ("12265145105056/5748810067571", UNSTABLE),
        ("326672481/271746296", UNSTABLE),
        ("141120/450983", UPOLY),
        ("510608/266403", UNSTABLE),
        ("518137667/237174992", UNSTABLE),
        ("90760711/67077371", UNSTABLE),
        ("121849781/73313456", UNSTABLE),
        ("977249482633/573603226348", UNSTABLE),
        ("27195/19651", UNSTABLE),
        ("138419/99094", UNSTABLE),
        ("2936215/2735927", UNSTABLE),
        ("173974704/197727059", UPOLY),
        ("5389/4499", UNSTABLE),
        ("304/409", UPOLY),
        ("203968842/196251577", UNSTABLE),
        ("31595933/35875483", UPOLY),
        ("3046408136973/2450627729348", UNSTABLE),
        ("185791/394975", UPOLY),
        ("80506889/111477439", UPOLY),
        ("17172/162187", UPOLY),
        ("18300/16571", UNSTABLE),
        ("400/341", UNSTABLE),
        ("20550/35413", UPOLY),
        ("0", UPOLY),
        ("567397500/324135871", UNSTABLE),
        ("2758057258564/2028544442569", UNSTABLE),
        ("277721596/369479321", UPOLY),
        ("182110284/153124261", UNSTABLE),
        ("2850/3389", UPOLY),
        ("1095285/924382", UNSTABLE),
        ("1275/1424", UPOLY),
        ("5/11", UPOLY),
        ("0", UPOLY),
        ("31/67", UPOLY),
        ("119/258", UPOLY),
        ("0", UPOLY),
        ("737568/395263", UNSTABLE),
        ("0", UPOLY),
        ("608/409", UNSTABLE),
        ("304/409", UPOLY),
        ("0", UPOLY),
        ("1013328/1289443", UPOLY),
        ("3418840588/2592694163", UNSTABLE),
        ("0", UPOLY),
    ],
}

EXPECTED_CLASS_COUNTS = {2: 5, 3: 18, 4: 124}
EXPECTED_SPLITS = {2: (5, 0), 3: (12, 6), 4: (49, 75)}
