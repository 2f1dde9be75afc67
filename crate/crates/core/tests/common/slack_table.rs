// Generated by tests/oracles/slack_oracle.py (mpmath, 60 digits). Do not edit.
// (epsilon, c, n, lambda, epsilon_eff, delta)
pub const SLACK_TABLE: [(f64, f64, u64, f64, f64, f64); 100] = [
    (0.004646057755922876, 0.10880165302987779, 9, 1.2899113923705598e-05, 0.0023230288779614379109, 10.401969802403076403),
    (0.6966026434174409, 1.0, 3, 0.6738633631831276, 0.34830132170872046826, 1.0783565433028013028),
    (0.0193902883824397, 1.0, 1, 8.365743524460742e-05, 0.0096951441912198500078, 205.7891552692280217),
    (0.6214400855635898, 2.0, 1652, 0.0008579396595361678, 0.31072004278179488068, 0.0063449705230422343958),
    (0.014658782967249238, 3.6307558194150182, 1144, 0.00015900739692330772, 0.0073293914836246188554, 0.8642854071383187036),
    (1.2396611398127404, 1.0, 559197, 0.0001672168372861338, 1.2183859625556134501, 0.0),
    (2.118681195224954, 0.25, 169, 0.0017878489178372126, 0.91287827561272317193, 0.0),
    (0.031217756029585545, 0.14029163912432874, 324, 5.496060610600461e-05, 0.015608878014792772551, 0.055209924785429208839),
    (0.2255992308483992, 2.2374537590638286, 161921, 0.5762876831883328, 0.2255512755781645977, 0.0),
    (0.5280845156453923, 1.0, 2355, 1.4328776755463438e-05, 0.26404225782269613587, 0.0029943946641407512024),
    (3.013039294684372, 2.0, 5, 0.0003707114274475029, 1.506519647342186019, 0.35552893622488902093),
    (0.0048783002966491145, 0.25, 66820, 0.005382515866801445, 0.0034885802615407529651, 0.0),
    (0.0681839073443629, 0.25, 7, 0.04757491196944376, 0.034091953672181450619, 2.029792573910236168),
    (0.1233165327465692, 0.25, 5, 0.2218426415368498, 0.061658266373284600914, 1.3751283617431626278),
    (0.015197855248993522, 0.25, 26596, 0.002455247416379947, 0.0075554793929918924312, 0.0),
    (0.0754771068093815, 1.0, 11, 0.03424513597111151, 0.037738553404690747262, 4.7382798136370191103),
    (0.04142504609409085, 0.25, 199, 0.0026752498444815058, 0.020712523047045426627, 0.11800415198576841098),
    (0.20289364655142436, 0.25, 180688, 0.00011765727789943186, 0.1795116947630908065, 0.0),
    (0.0397648517751774, 0.1715712383648203, 7, 0.00011358421318432957, 0.019882425887588699165, 2.4531633408368573109),
    (0.009043099287383607, 0.25, 4559, 0.0004568159011095988, 0.0045215496436918035592, 0.023771436824572406707),
    (0.06380194190164072, 2.0, 27291, 0.04085806617737891, 0.060217896162397514787, 0.0),
    (0.12601249883956106, 1.0, 7, 0.046003046606110855, 0.063006249419780530063, 4.4176409762250330376),
    (0.587319274219818, 0.25, 47, 4.405266040800929e-05, 0.29365963710990899971, 0.033588059730647028437),
    (0.755071577898413, 2.0, 2, 5.0306802607099396e-05, 0.37753578894920647446, 4.8131820303659373996),
    (0.7277445350659719, 0.1335431169239591, 2784, 0.013031412348866305, 0.72039613657177892269, 0.0),
    (0.029011269076288523, 1.0, 3, 0.28787659948805727, 0.01450563453814426168, 45.504810481509019972),
    (0.07544358639219662, 2.0, 1811, 0.00037155146009935355, 0.037721793196098307721, 0.057631011261256831568),
    (0.013718125902816037, 0.25, 137150, 0.06367817439916172, 0.013660875654795909483, 0.0),
    (0.014386218990460014, 2.0, 175, 0.22013646760952654, 0.0071931094952300067905, 2.9517968983326267777),
    (0.0038846018335397673, 1.6571588607452812, 36, 1.559142537363626e-05, 0.0019423009167698836348, 47.376620753017548882),
    (0.27361330413932583, 2.0, 9722, 0.000469740329022869, 0.13680665206966291514, 0.0024360140421454276946),
    (0.3110700659525962, 1.0, 55, 2.1453188457560378e-05, 0.15553503297629808766, 0.22480253423344181531),
    (0.47167353311448335, 0.25, 1320, 0.0030994980636037685, 0.3530524382428288285, 0.0),
    (0.6379259462140946, 2.0, 90114, 0.0016230981148148348, 0.61076340010196017079, 0.0),
    (0.021095363550291832, 2.0, 420369, 0.00014779184783182645, 0.010547681775145915928, 0.00075196795677803824537),
    (0.7992622564342584, 2.7163418762556515, 4371, 0.00034815744758398114, 0.39963112821712920564, 0.0024615600822886546335),
    (0.05071264761599018, 1.0, 5, 6.268506369039523e-05, 0.02535632380799509103, 15.675306050334906636),
    (0.5722271964076395, 0.875093150179355, 45, 0.009357821873366857, 0.28611359820381976338, 0.1170862899159720879),
    (0.23135985752699112, 0.25, 12, 0.001891881648088453, 0.11567992876349555975, 0.34798111169990482477),
    (0.0058410747673571396, 2.0, 4645, 0.004300978783825422, 0.0029205373836785697775, 0.29034082961893317385),
    (0.020082815928784796, 1.0063464042008887, 378, 0.005531779304186527, 0.010041407964392397995, 0.52340089354012238466),
    (3.128052259061296, 0.14749237830174958, 1, 0.0002928503006319612, 1.5640261295306479017, 0.12408217431533189074),
    (0.12268449619967339, 0.25, 301, 6.835198079687096e-05, 0.061342248099836696462, 0.026598186700106567031),
    (1.7428596685119544, 1.5769912387891487, 47, 1.539429410882966e-05, 0.87142983425597719815, 0.06142934638370934917),
    (0.32899861064147856, 0.25, 5, 0.0665411677938047, 0.1644993053207392808, 0.51670680318900824034),
    (0.04253353118782366, 0.25, 5936, 0.004143847258556838, 0.022309175662533637574, 0.0),
    (0.08685906823380313, 0.25, 15, 9.134969042091836e-05, 0.043429534116901563623, 0.75913232189243239365),
    (0.027706493345332404, 1.0, 462617, 0.02477523987237267, 0.027532002922707393395, 0.0),
    (0.3199977464339126, 1.0, 1741, 0.0018736914643433782, 0.15999887321695629994, 0.0050227783456938757786),
    (0.006907330847518053, 1.0, 4001, 1.2686987918554397e-05, 0.0034536654237590264267, 0.14459991843278642122),
    (0.005585068061238689, 2.0, 39, 0.04260629053443122, 0.0027925340306193444616, 36.659727384377870114),
    (0.38911033460172934, 2.0, 448, 8.751107160666924e-05, 0.19455516730086466759, 0.043608764789659061544),
    (0.05846443795791346, 0.25, 18373, 0.00020976917025182848, 0.029232218978956728966, 0.00071439777784814547784),
    (0.02101959465644363, 2.0, 34123, 0.5640386262588483, 0.020811777510880177561, 0.0),
    (0.004672366151604752, 1.0, 2338, 0.00040981120804805914, 0.0023361830758023760177, 0.36554287796293965461),
    (0.016071077715686194, 1.0, 98, 1.2662618700660123e-05, 0.0080355388578430969604, 2.5346266977980194301),
    (0.008574197437391922, 0.44273610846871037, 2592, 1.7059893962379102e-05, 0.0042870987186959608542, 0.079582544406733834153),
    (0.022582694532312934, 2.0, 414787, 1.1358152724922956e-05, 0.011291347266156466847, 0.00084029463276665919822),
    (1.0340995588356514, 0.25, 1, 0.03399085084354141, 0.51704977941782570561, 0.81341397266420024432),
    (0.043534960275580445, 1.0, 18418, 0.002006155134967846, 0.02176748013779022245, 0.0029553546537517932695),
    (0.0736491966821091, 0.11223354752890884, 4, 0.00010688444260901818, 0.036824598341054552708, 1.5098006829272025401),
    (1.9586412441164383, 1.639070539366766, 556843, 0.0020972249245032795, 1.955836163987365278, 0.0),
    (0.039987194025588056, 1.0, 1, 0.0006988064532193983, 0.019993597012794028095, 99.532159447575019141),
    (0.0041255106919829915, 0.25, 120, 7.941363392588663e-05, 0.0020627553459914957541, 2.0188310405933274299),
    (0.0070342427668093664, 0.3223980815914714, 470, 0.0039684817741034, 0.0035171213834046832249, 0.38575386320259130292),
    (0.06965159364225242, 0.25, 470239, 0.40930138119650933, 0.069648995829365115444, 0.0),
    (0.007243074053881401, 0.25, 174768, 0.12784959762763995, 0.0072206968255712923101, 0.0),
    (0.05010575711888407, 2.0, 38754, 7.688283637190802e-05, 0.025052878559442035011, 0.0040172591684664610959),
    (0.42162532058833657, 2.0, 24, 0.008021038334610826, 0.21081266029416828589, 0.74163550248238241511),
    (0.1079051373164013, 0.25, 10347, 0.0010150125676704983, 0.060854483690082822311, 0.0),
    (0.010263222688223297, 0.10285749950581512, 76698, 0.00210972430776255, 0.008992302681994546534, 0.0),
    (0.01455715999205707, 2.0, 1, 0.13764602673415297, 0.0072785799960285351221, 548.42070422731819992),
    (1.011995793127099, 1.0, 3, 0.00010901594148544118, 0.50599789656354954293, 1.1577731137110708201),
    (0.5063673111962134, 1.0, 168, 0.8943473537785311, 0.4931002954858316316, 0.0),
    (0.012177640057911618, 1.0, 2031, 0.0006180285004918866, 0.0060888200289558091008, 0.1608645523462152362),
    (0.020768950765392487, 1.0, 5, 0.0003072202689742163, 0.010384475382696243401, 38.418817136319119474),
    (0.01068631828186297, 0.25, 20, 0.00021902118094697083, 0.0053431591409314853347, 4.6724136791184942347),
    (0.0574243937848896, 0.36579534843123584, 279, 0.00720637222530124, 0.028712196892444800944, 0.083466303291874803691),
    (0.012512216202435245, 1.0, 413, 0.0004648432542251583, 0.0062561081012176226329, 0.77238704833147713902),
    (0.05164783247720607, 0.667724738357614, 818, 1.2839441683489125e-05, 0.025823916238603035478, 0.062799539379144049958),
    (0.13278878733409588, 1.0, 1, 0.0019411823309578129, 0.066394393667047940655, 29.623850496754566869),
    (0.004647313426422568, 0.25, 531547, 0.0006695903377524664, 0.0032429915102513619008, 0.0),
    (0.14997296370250865, 1.0, 132, 0.010210082741206319, 0.074986481851254324638, 0.18808232899802441308),
    (0.29923533105115857, 0.25, 36, 4.143256859661816e-05, 0.14961766552557928533, 0.089358837947339164724),
    (0.013573900438608148, 3.497855825983436, 82459, 2.4149688702547975e-05, 0.0067869502193040739599, 0.012454916290009333226),
    (0.28322228141721095, 2.0, 4036, 0.07480194384175444, 0.27001658313298257936, 0.0),
    (0.8476494860466376, 3.605097379512088, 1, 1.5153739912398719e-05, 0.42382474302331879512, 15.273260463716606085),
    (0.008324115236287762, 0.31470741139898273, 6, 0.13102876078633094, 0.0041620576181438809563, 25.047228103357595408),
    (0.6156923423903509, 2.0, 1232, 0.030821802666737334, 0.51303323101692865934, 0.0),
    (2.784602433629543, 2.0, 30, 0.044098695892743754, 0.94263462815424391385, 0.0),
    (0.13176240827076235, 1.0, 12727, 0.0015330620780900908, 0.031797975898629863523, 0.0),
    (2.3920779881426597, 0.25, 43, 0.07664859662519792, 2.2458520761807633088, 0.0),
    (0.0744130063001509, 0.25, 846, 1.699352099426972e-05, 0.037206503150075447006, 0.015720475173663427701),
    (0.132980544822452, 1.0, 20, 0.007580879184090931, 0.066490272411226000737, 1.4715370395618215231),
    (2.435376641146705, 0.25, 3, 0.011180398260681923, 1.2176883205733524118, 0.088226494412824326892),
    (0.014234782571913141, 1.0, 212068, 2.7640611573998427e-05, 0.0071173912859565707442, 0.0012950583807523337328),
    (0.026984451232035706, 0.2125160904631805, 62442, 0.32324475886266885, 0.02696339351767550411, 0.0),
    (0.004345493499891191, 3.2645705677832377, 3, 0.012656228953190135, 0.0021727467499455953466, 1001.1157135529370273),
    (0.18532604484947, 2.0, 4, 0.019027248612697195, 0.092663022424734994842, 10.524694470214419285),
    (0.009480242581007024, 1.0, 5, 0.0009385180489485309, 0.0047401212905035117889, 84.285127307088442432),
];
