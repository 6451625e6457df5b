// Generated by special_values.py (mpmath, 40 digits). Do not edit.
pub const J0: [(f64, f64); 50] = [
    (0.001, 0.999999750000015625),
    (0.0012648552168552961, 0.99999960003536009142),
    (0.0015998587196060581, 0.99999936011312168895),
    (0.002023589647725157, 0.99999897627149641001),
    (0.0025595479226995358, 0.99999836217927846573),
    (0.0032374575428176441, 0.99999737971888108332),
    (0.0040949150623804257, 0.99999580792205135902),
    (0.0051794746792312111, 0.99999329327175688095),
    (0.0065512855685955088, 0.99998927019313198701),
    (0.0082864277285468451, 0.99998283385254453891),
    (0.010481131341546858, 0.99997253666001108575),
    (0.013257113655901091, 0.99995606271700808596),
    (0.016768329368110083, 0.99992970701786024755),
    (0.021209508879201908, 0.99988754234509507924),
    (0.026826957952797256, 0.99982008667451711221),
    (0.033932217718953286, 0.99971217186374597962),
    (0.042919342601287783, 0.9995395355240456717),
    (0.054286754393238601, 0.99926337276815555858),
    (0.068664884500430012, 0.99882163070684837599),
    (0.086851137375135265, 0.99811510883946846451),
    (0.10985411419875583, 0.99698529318023316157),
    (0.13894954943731377, 0.99517907692028626248),
    (0.1757510624854792, 0.9922927859657726989),
    (0.22229964825261947, 0.98768382133856336143),
    (0.28117686979742307, 0.9803323426272232527),
    (0.35564803062231287, 0.96862772094304902413),
    (0.44984326689694459, 0.95004650409432696366),
    (0.56898660290182967, 0.92068658493556522858),
    (0.71968567300115205, 0.87464502278439451121),
    (0.91029817799152191, 0.8033244101282627414),
    (1.1513953993264474, 0.69504267070569604987),
    (1.4563484775012439, 0.53604361429087229003),
    (1.842069969326716, 0.31551213877831408527),
    (2.329951810515372, 0.039451605874053488036),
    (2.9470517025518106, -0.24158088849107804543),
    (3.7275937203149403, -0.40055837951158252998),
    (4.7148663634573937, -0.26515884379178756445),
    (5.9636233165946431, 0.14045214515880180959),
    (7.5431200633546176, 0.26027914269172851274),
    (9.5409547634999399, -0.20035487474984606694),
    (12.067926406393287, 0.062703066870885456515),
    (15.264179671752334, -0.066823937197915833737),
    (19.306977288832503, 0.17149655268803723285),
    (24.420530945486512, 0.01098148042675192847),
    (30.888435964774811, 0.036052734686043013248),
    (39.069399370546172, 0.10665186153149694059),
    (49.417133613238342, -0.0074265310155855118933),
    (62.505519252739731, 0.044537280869473812174),
    (79.060432109076999, -0.086569309527553189772),
    (100.0, 0.019985850304223122424),
];
pub const Y0: [(f64, f64); 50] = [
    (0.001, -4.4714166113759232557),
    (0.0012648552168552961, -4.3218372115281482974),
    (0.0015998587196060581, -4.1722574239481743007),
    (0.002023589647725157, -4.0226770375789145887),
    (0.0025595479226995358, -3.8730957276724245811),
    (0.0032374575428176441, -3.7235129953379826105),
    (0.0040949150623804257, -3.5739280754746961553),
    (0.0051794746792312111, -3.4243397969118920236),
    (0.0065512855685955088, -3.2747463705498938862),
    (0.0082864277285468451, -3.1251450694504479212),
    (0.010481131341546858, -2.97553174748688056),
    (0.013257113655901091, -2.8259001180004706994),
    (0.016768329368110083, -2.6762406777813464824),
    (0.021209508879201908, -2.5265391105184223072),
    (0.026826957952797256, -2.3767739326376506467),
    (0.033932217718953286, -2.2269130476349416486),
    (0.042919342601287783, -2.0769087477904559021),
    (0.054286754393238601, -1.9266905434664802072),
    (0.068664884500430012, -1.7761550194277731205),
    (0.086851137375135265, -1.6251517485061440534),
    (0.10985411419875583, -1.4734642215169272494),
    (0.13894954943731377, -1.320784972310243916),
    (0.1757510624854792, -1.1666849972160268271),
    (0.22229964825261947, -1.0105800200815438837),
    (0.28117686979742307, -0.85170178027059384017),
    (0.35564803062231287, -0.68909448288096542581),
    (0.44984326689694459, -0.52168072448941204859),
    (0.56898660290182967, -0.3484878947923649633),
    (0.71968567300115205, -0.1692112698051323225),
    (0.91029817799152191, 0.014568410424090790595),
    (1.1513953993264474, 0.19700400498819341885),
    (1.4563484775012439, 0.36382182717559215535),
    (1.842069969326716, 0.48631106588864193385),
    (2.329951810515372, 0.51628856694942849633),
    (2.9470517025518106, 0.39365510023700862238),
    (3.7275937203149403, 0.094580553199971185733),
    (4.7148663634573937, -0.25298909326444687967),
    (5.9636233165946431, -0.29438790400033988077),
    (7.5431200633546176, 0.1283426359686739162),
    (9.5409547634999399, 0.16276628804377899089),
    (12.067926406393287, -0.22085423101038094271),
    (15.264179671752334, 0.19292258534414916116),
    (19.306977288832503, -0.059594332377968345856),
    (24.420530945486512, -0.16106829976000489746),
    (30.888435964774811, -0.13895250869004453871),
    (39.069399370546172, 0.070132985676793394844),
    (49.417133613238342, -0.11325528459108439183),
    (62.505519252739731, -0.090560045435537207452),
    (79.060432109076999, 0.023620162182707722265),
    (100.0, -0.077244313365083152254),
];
pub const E1: [(f64, f64); 50] = [
    (0.001, 6.3315393641361493112),
    (0.0012517375796881288, 6.1072583102369900118),
    (0.0015668469684034945, 5.8830405478693013167),
    (0.0019612812319710722, 5.658901984614047905),
    (0.0024550094223952214, 5.4348625182748551851),
    (0.0030730275525005452, 5.2109470332673478472),
    (0.0038466240708819664, 4.98718664325908881),
    (0.0048149639044558898, 4.7636202394682933521),
    (0.0060270712640493173, 4.5402964175331203832),
    (0.007544311596668964, 4.317275871955130674),
    (0.0094434983384274907, 4.0946343660032593151),
    (0.011820781753932093, 3.8724664066484588038),
    (0.01479651674268855, 3.6508897782247249231),
    (0.018521356055307841, 3.430051114066308446),
    (0.023183877401213106, 3.2101327102400840307),
    (0.029020130585980797, 2.9913608057785767883),
    (0.036325588021929041, 2.7740155628206158936),
    (0.045470103631317538, 2.5584429667996620836),
    (0.056916637467633806, 2.3450688139705501884),
    (0.071244694027722613, 2.1344148348058846392),
    (0.089179660867882773, 1.9271167785938939875),
    (0.11162953285217171, 1.7239439030870714669),
    (0.13973088127409389, 1.5258187026196723832),
    (0.17490639513372355, 1.3338347846387672024),
    (0.2189369077166626, 1.1492694851757431557),
    (0.27405155496965844, 0.97358605336011304581),
    (0.34304063012748842, 0.80841810116970611882),
    (0.42939684809047296, 0.65552681892626544105),
    (0.53749217135447969, 0.51671995345543416921),
    (0.67279914967257337, 0.39372216356666679092),
    (0.84216797922737807, 0.2879913447884000836),
    (1.0541733080089206, 0.20048760524686697295),
    (1.3195483451389145, 0.13142275422107656092),
    (1.6517282518256604, 0.080046747610751010243),
    (2.0675303242427563, 0.04455392126857011043),
    (2.5880054039994396, 0.022195730932158845667),
    (3.2395036206220564, 0.0096425983405118993013),
    (4.0550084214683828, 0.0035359308614177634182),
    (5.0758064271038128, 0.0010506447252889987491),
    (6.3535776520283758, 0.00024032947732526345641),
    (7.9530119125105827, 0.000039688985725294189746),
    (9.9550838825968526, 4.3660100844276381465e-6),
    (12.461152604794083, 2.892225242274686143e-7),
    (15.598093001649367, 1.0167178609548105643e-8),
    (19.524719181634918, 1.618796855174264253e-10),
    (24.439824732510075, 9.5726148059790797628e-13),
    (30.592247058674229, 1.6397823259653819669e-15),
    (38.293465290446157, 5.9608383688368026835e-19),
    (47.933369560534437, 3.1143794484149750769e-23),
    (60.0, 1.4358675656812567884e-28),
];
