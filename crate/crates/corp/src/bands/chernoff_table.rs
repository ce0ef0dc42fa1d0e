// Quantiles of Chernoff's distribution, the law of the argmax of
// W(t) - t^2 for two-sided Brownian motion W. Pairs (p, q) with
// F(q) = p on an equispaced q-grid of step 0.005; quantiles between
// grid points come from linear interpolation, which is accurate to
// about 2e-5 here. Generated offline from the Airy-function integral
// representation of the density and cross-checked against the residue
// series expansion and published tabulated values.
pub(super) static TABLE: [(f64, f64); 532] = [
    (0.500000000000, 0.000000),
    (0.503791668993, 0.005000),
    (0.507583015216, 0.010000),
    (0.511373715974, 0.015000),
    (0.515163448721, 0.020000),
    (0.518951891133, 0.025000),
    (0.522738721186, 0.030000),
    (0.526523617226, 0.035000),
    (0.530306258046, 0.040000),
    (0.534086322960, 0.045000),
    (0.537863491874, 0.050000),
    (0.541637445362, 0.055000),
    (0.545407864740, 0.060000),
    (0.549174432136, 0.065000),
    (0.552936830568, 0.070000),
    (0.556694744011, 0.075000),
    (0.560447857472, 0.080000),
    (0.564195857063, 0.085000),
    (0.567938430069, 0.090000),
    (0.571675265023, 0.095000),
    (0.575406051775, 0.100000),
    (0.579130481563, 0.105000),
    (0.582848247080, 0.110000),
    (0.586559042548, 0.115000),
    (0.590262563784, 0.120000),
    (0.593958508268, 0.125000),
    (0.597646575212, 0.130000),
    (0.601326465628, 0.135000),
    (0.604997882393, 0.140000),
    (0.608660530314, 0.145000),
    (0.612314116197, 0.150000),
    (0.615958348908, 0.155000),
    (0.619592939441, 0.160000),
    (0.623217600975, 0.165000),
    (0.626832048944, 0.170000),
    (0.630436001094, 0.175000),
    (0.634029177547, 0.180000),
    (0.637611300857, 0.185000),
    (0.641182096075, 0.190000),
    (0.644741290804, 0.195000),
    (0.648288615258, 0.200000),
    (0.651823802318, 0.205000),
    (0.655346587591, 0.210000),
    (0.658856709462, 0.215000),
    (0.662353909149, 0.220000),
    (0.665837930758, 0.225000),
    (0.669308521334, 0.230000),
    (0.672765430912, 0.235000),
    (0.676208412570, 0.240000),
    (0.679637222475, 0.245000),
    (0.683051619934, 0.250000),
    (0.686451367441, 0.255000),
    (0.689836230723, 0.260000),
    (0.693205978785, 0.265000),
    (0.696560383954, 0.270000),
    (0.699899221924, 0.275000),
    (0.703222271798, 0.280000),
    (0.706529316125, 0.285000),
    (0.709820140947, 0.290000),
    (0.713094535828, 0.295000),
    (0.716352293903, 0.300000),
    (0.719593211903, 0.305000),
    (0.722817090202, 0.310000),
    (0.726023732839, 0.315000),
    (0.729212947561, 0.320000),
    (0.732384545847, 0.325000),
    (0.735538342945, 0.330000),
    (0.738674157896, 0.335000),
    (0.741791813566, 0.340000),
    (0.744891136670, 0.345000),
    (0.747971957799, 0.350000),
    (0.751034111444, 0.355000),
    (0.754077436019, 0.360000),
    (0.757101773883, 0.365000),
    (0.760106971361, 0.370000),
    (0.763092878762, 0.375000),
    (0.766059350398, 0.380000),
    (0.769006244602, 0.385000),
    (0.771933423740, 0.390000),
    (0.774840754229, 0.395000),
    (0.777728106547, 0.400000),
    (0.780595355248, 0.405000),
    (0.783442378969, 0.410000),
    (0.786269060440, 0.415000),
    (0.789075286495, 0.420000),
    (0.791860948071, 0.425000),
    (0.794625940223, 0.430000),
    (0.797370162120, 0.435000),
    (0.800093517053, 0.440000),
    (0.802795912433, 0.445000),
    (0.805477259793, 0.450000),
    (0.808137474784, 0.455000),
    (0.810776477180, 0.460000),
    (0.813394190865, 0.465000),
    (0.815990543834, 0.470000),
    (0.818565468185, 0.475000),
    (0.821118900112, 0.480000),
    (0.823650779898, 0.485000),
    (0.826161051901, 0.490000),
    (0.828649664548, 0.495000),
    (0.831116570320, 0.500000),
    (0.833561725736, 0.505000),
    (0.835985091346, 0.510000),
    (0.838386631706, 0.515000),
    (0.840766315370, 0.520000),
    (0.843124114862, 0.525000),
    (0.845460006667, 0.530000),
    (0.847773971203, 0.535000),
    (0.850065992803, 0.540000),
    (0.852336059691, 0.545000),
    (0.854584163957, 0.550000),
    (0.856810301537, 0.555000),
    (0.859014472181, 0.560000),
    (0.861196679429, 0.565000),
    (0.863356930586, 0.570000),
    (0.865495236685, 0.575000),
    (0.867611612465, 0.580000),
    (0.869706076334, 0.585000),
    (0.871778650341, 0.590000),
    (0.873829360141, 0.595000),
    (0.875858234962, 0.600000),
    (0.877865307568, 0.605000),
    (0.879850614225, 0.610000),
    (0.881814194665, 0.615000),
    (0.883756092047, 0.620000),
    (0.885676352918, 0.625000),
    (0.887575027175, 0.630000),
    (0.889452168025, 0.635000),
    (0.891307831943, 0.640000),
    (0.893142078630, 0.645000),
    (0.894954970974, 0.650000),
    (0.896746575001, 0.655000),
    (0.898516959838, 0.660000),
    (0.900266197661, 0.665000),
    (0.901994363656, 0.670000),
    (0.903701535970, 0.675000),
    (0.905387795664, 0.680000),
    (0.907053226667, 0.685000),
    (0.908697915731, 0.690000),
    (0.910321952376, 0.695000),
    (0.911925428847, 0.700000),
    (0.913508440061, 0.705000),
    (0.915071083561, 0.710000),
    (0.916613459462, 0.715000),
    (0.918135670402, 0.720000),
    (0.919637821490, 0.725000),
    (0.921120020255, 0.730000),
    (0.922582376593, 0.735000),
    (0.924025002719, 0.740000),
    (0.925448013105, 0.745000),
    (0.926851524439, 0.750000),
    (0.928235655560, 0.755000),
    (0.929600527415, 0.760000),
    (0.930946262997, 0.765000),
    (0.932272987296, 0.770000),
    (0.933580827242, 0.775000),
    (0.934869911653, 0.780000),
    (0.936140371179, 0.785000),
    (0.937392338248, 0.790000),
    (0.938625947011, 0.795000),
    (0.939841333287, 0.800000),
    (0.941038634510, 0.805000),
    (0.942217989672, 0.810000),
    (0.943379539269, 0.815000),
    (0.944523425247, 0.820000),
    (0.945649790945, 0.825000),
    (0.946758781044, 0.830000),
    (0.947850541509, 0.835000),
    (0.948925219536, 0.840000),
    (0.949982963497, 0.845000),
    (0.951023922888, 0.850000),
    (0.952048248272, 0.855000),
    (0.953056091227, 0.860000),
    (0.954047604291, 0.865000),
    (0.955022940911, 0.870000),
    (0.955982255389, 0.875000),
    (0.956925702827, 0.880000),
    (0.957853439077, 0.885000),
    (0.958765620690, 0.890000),
    (0.959662404860, 0.895000),
    (0.960543949376, 0.900000),
    (0.961410412570, 0.905000),
    (0.962261953267, 0.910000),
    (0.963098730731, 0.915000),
    (0.963920904622, 0.920000),
    (0.964728634940, 0.925000),
    (0.965522081981, 0.930000),
    (0.966301406286, 0.935000),
    (0.967066768592, 0.940000),
    (0.967818329788, 0.945000),
    (0.968556250867, 0.950000),
    (0.969280692878, 0.955000),
    (0.969991816882, 0.960000),
    (0.970689783905, 0.965000),
    (0.971374754898, 0.970000),
    (0.972046890687, 0.975000),
    (0.972706351934, 0.980000),
    (0.973353299092, 0.985000),
    (0.973987892364, 0.990000),
    (0.974610291662, 0.995000),
    (0.975220656566, 1.000000),
    (0.975819146283, 1.005000),
    (0.976405919608, 1.010000),
    (0.976981134887, 1.015000),
    (0.977544949977, 1.020000),
    (0.978097522209, 1.025000),
    (0.978639008354, 1.030000),
    (0.979169564583, 1.035000),
    (0.979689346436, 1.040000),
    (0.980198508785, 1.045000),
    (0.980697205802, 1.050000),
    (0.981185590925, 1.055000),
    (0.981663816828, 1.060000),
    (0.982132035386, 1.065000),
    (0.982590397650, 1.070000),
    (0.983039053812, 1.075000),
    (0.983478153179, 1.080000),
    (0.983907844145, 1.085000),
    (0.984328274161, 1.090000),
    (0.984739589714, 1.095000),
    (0.985141936294, 1.100000),
    (0.985535458373, 1.105000),
    (0.985920299383, 1.110000),
    (0.986296601688, 1.115000),
    (0.986664506563, 1.120000),
    (0.987024154175, 1.125000),
    (0.987375683558, 1.130000),
    (0.987719232595, 1.135000),
    (0.988054937997, 1.140000),
    (0.988382935287, 1.145000),
    (0.988703358779, 1.150000),
    (0.989016341564, 1.155000),
    (0.989322015491, 1.160000),
    (0.989620511152, 1.165000),
    (0.989911957870, 1.170000),
    (0.990196483681, 1.175000),
    (0.990474215322, 1.180000),
    (0.990745278220, 1.185000),
    (0.991009796480, 1.190000),
    (0.991267892871, 1.195000),
    (0.991519688819, 1.200000),
    (0.991765304397, 1.205000),
    (0.992004858315, 1.210000),
    (0.992238467911, 1.215000),
    (0.992466249147, 1.220000),
    (0.992688316599, 1.225000),
    (0.992904783450, 1.230000),
    (0.993115761491, 1.235000),
    (0.993321361109, 1.240000),
    (0.993521691285, 1.245000),
    (0.993716859593, 1.250000),
    (0.993906972196, 1.255000),
    (0.994092133843, 1.260000),
    (0.994272447866, 1.265000),
    (0.994448016184, 1.270000),
    (0.994618939297, 1.275000),
    (0.994785316292, 1.280000),
    (0.994947244837, 1.285000),
    (0.995104821188, 1.290000),
    (0.995258140189, 1.295000),
    (0.995407295275, 1.300000),
    (0.995552378474, 1.305000),
    (0.995693480411, 1.310000),
    (0.995830690311, 1.315000),
    (0.995964096006, 1.320000),
    (0.996093783939, 1.325000),
    (0.996219839168, 1.330000),
    (0.996342345374, 1.335000),
    (0.996461384864, 1.340000),
    (0.996577038583, 1.345000),
    (0.996689386118, 1.350000),
    (0.996798505704, 1.355000),
    (0.996904474237, 1.360000),
    (0.997007367277, 1.365000),
    (0.997107259060, 1.370000),
    (0.997204222508, 1.375000),
    (0.997298329235, 1.380000),
    (0.997389649559, 1.385000),
    (0.997478252513, 1.390000),
    (0.997564205853, 1.395000),
    (0.997647576071, 1.400000),
    (0.997728428404, 1.405000),
    (0.997806826848, 1.410000),
    (0.997882834166, 1.415000),
    (0.997956511904, 1.420000),
    (0.998027920398, 1.425000),
    (0.998097118791, 1.430000),
    (0.998164165044, 1.435000),
    (0.998229115947, 1.440000),
    (0.998292027132, 1.445000),
    (0.998352953089, 1.450000),
    (0.998411947177, 1.455000),
    (0.998469061637, 1.460000),
    (0.998524347606, 1.465000),
    (0.998577855132, 1.470000),
    (0.998629633185, 1.475000),
    (0.998679729673, 1.480000),
    (0.998728191455, 1.485000),
    (0.998775064358, 1.490000),
    (0.998820393184, 1.495000),
    (0.998864221732, 1.500000),
    (0.998906592809, 1.505000),
    (0.998947548244, 1.510000),
    (0.998987128901, 1.515000),
    (0.999025374697, 1.520000),
    (0.999062324615, 1.525000),
    (0.999098016717, 1.530000),
    (0.999132488159, 1.535000),
    (0.999165775208, 1.540000),
    (0.999197913252, 1.545000),
    (0.999228936818, 1.550000),
    (0.999258879586, 1.555000),
    (0.999287774401, 1.560000),
    (0.999315653291, 1.565000),
    (0.999342547476, 1.570000),
    (0.999368487389, 1.575000),
    (0.999393502685, 1.580000),
    (0.999417622256, 1.585000),
    (0.999440874247, 1.590000),
    (0.999463286068, 1.595000),
    (0.999484884409, 1.600000),
    (0.999505695255, 1.605000),
    (0.999525743894, 1.610000),
    (0.999545054939, 1.615000),
    (0.999563652335, 1.620000),
    (0.999581559375, 1.625000),
    (0.999598798713, 1.630000),
    (0.999615392376, 1.635000),
    (0.999631361780, 1.640000),
    (0.999646727739, 1.645000),
    (0.999661510480, 1.650000),
    (0.999675729657, 1.655000),
    (0.999689404360, 1.660000),
    (0.999702553130, 1.665000),
    (0.999715193969, 1.670000),
    (0.999727344356, 1.675000),
    (0.999739021255, 1.680000),
    (0.999750241126, 1.685000),
    (0.999761019944, 1.690000),
    (0.999771373199, 1.695000),
    (0.999781315919, 1.700000),
    (0.999790862672, 1.705000),
    (0.999800027583, 1.710000),
    (0.999808824341, 1.715000),
    (0.999817266211, 1.720000),
    (0.999825366046, 1.725000),
    (0.999833136295, 1.730000),
    (0.999840589015, 1.735000),
    (0.999847735878, 1.740000),
    (0.999854588187, 1.745000),
    (0.999861156878, 1.750000),
    (0.999867452534, 1.755000),
    (0.999873485395, 1.760000),
    (0.999879265364, 1.765000),
    (0.999884802019, 1.770000),
    (0.999890104619, 1.775000),
    (0.999895182115, 1.780000),
    (0.999900043157, 1.785000),
    (0.999904696106, 1.790000),
    (0.999909149035, 1.795000),
    (0.999913409743, 1.800000),
    (0.999917485762, 1.805000),
    (0.999921384363, 1.810000),
    (0.999925112563, 1.815000),
    (0.999928677136, 1.820000),
    (0.999932084615, 1.825000),
    (0.999935341305, 1.830000),
    (0.999938453283, 1.835000),
    (0.999941426413, 1.840000),
    (0.999944266345, 1.845000),
    (0.999946978525, 1.850000),
    (0.999949568201, 1.855000),
    (0.999952040429, 1.860000),
    (0.999954400079, 1.865000),
    (0.999956651840, 1.870000),
    (0.999958800229, 1.875000),
    (0.999960849591, 1.880000),
    (0.999962804108, 1.885000),
    (0.999964667806, 1.890000),
    (0.999966444556, 1.895000),
    (0.999968138081, 1.900000),
    (0.999969751960, 1.905000),
    (0.999971289637, 1.910000),
    (0.999972754419, 1.915000),
    (0.999974149484, 1.920000),
    (0.999975477886, 1.925000),
    (0.999976742559, 1.930000),
    (0.999977946320, 1.935000),
    (0.999979091871, 1.940000),
    (0.999980181810, 1.945000),
    (0.999981218628, 1.950000),
    (0.999982204714, 1.955000),
    (0.999983142361, 1.960000),
    (0.999984033768, 1.965000),
    (0.999984881043, 1.970000),
    (0.999985686207, 1.975000),
    (0.999986451197, 1.980000),
    (0.999987177869, 1.985000),
    (0.999987868000, 1.990000),
    (0.999988523294, 1.995000),
    (0.999989145380, 2.000000),
    (0.999989735821, 2.005000),
    (0.999990296109, 2.010000),
    (0.999990827674, 2.015000),
    (0.999991331884, 2.020000),
    (0.999991810048, 2.025000),
    (0.999992263415, 2.030000),
    (0.999992693183, 2.035000),
    (0.999993100493, 2.040000),
    (0.999993486439, 2.045000),
    (0.999993852064, 2.050000),
    (0.999994198365, 2.055000),
    (0.999994526294, 2.060000),
    (0.999994836759, 2.065000),
    (0.999995130629, 2.070000),
    (0.999995408731, 2.075000),
    (0.999995671854, 2.080000),
    (0.999995920754, 2.085000),
    (0.999996156147, 2.090000),
    (0.999996378720, 2.095000),
    (0.999996589124, 2.100000),
    (0.999996787983, 2.105000),
    (0.999996975889, 2.110000),
    (0.999997153407, 2.115000),
    (0.999997321076, 2.120000),
    (0.999997479406, 2.125000),
    (0.999997628886, 2.130000),
    (0.999997769979, 2.135000),
    (0.999997903127, 2.140000),
    (0.999998028749, 2.145000),
    (0.999998147246, 2.150000),
    (0.999998258995, 2.155000),
    (0.999998364359, 2.160000),
    (0.999998463681, 2.165000),
    (0.999998557285, 2.170000),
    (0.999998645482, 2.175000),
    (0.999998728565, 2.180000),
    (0.999998806814, 2.185000),
    (0.999998880492, 2.190000),
    (0.999998949853, 2.195000),
    (0.999999015133, 2.200000),
    (0.999999076559, 2.205000),
    (0.999999134346, 2.210000),
    (0.999999188697, 2.215000),
    (0.999999239805, 2.220000),
    (0.999999287852, 2.225000),
    (0.999999333011, 2.230000),
    (0.999999375446, 2.235000),
    (0.999999415313, 2.240000),
    (0.999999452758, 2.245000),
    (0.999999487921, 2.250000),
    (0.999999520932, 2.255000),
    (0.999999551917, 2.260000),
    (0.999999580993, 2.265000),
    (0.999999608271, 2.270000),
    (0.999999633856, 2.275000),
    (0.999999657849, 2.280000),
    (0.999999680343, 2.285000),
    (0.999999701426, 2.290000),
    (0.999999721183, 2.295000),
    (0.999999739692, 2.300000),
    (0.999999757029, 2.305000),
    (0.999999773263, 2.310000),
    (0.999999788462, 2.315000),
    (0.999999802688, 2.320000),
    (0.999999816000, 2.325000),
    (0.999999828454, 2.330000),
    (0.999999840102, 2.335000),
    (0.999999850994, 2.340000),
    (0.999999861177, 2.345000),
    (0.999999870694, 2.350000),
    (0.999999879587, 2.355000),
    (0.999999887895, 2.360000),
    (0.999999895655, 2.365000),
    (0.999999902900, 2.370000),
    (0.999999909664, 2.375000),
    (0.999999915977, 2.380000),
    (0.999999921867, 2.385000),
    (0.999999927361, 2.390000),
    (0.999999932486, 2.395000),
    (0.999999937264, 2.400000),
    (0.999999941717, 2.405000),
    (0.999999945868, 2.410000),
    (0.999999949735, 2.415000),
    (0.999999953338, 2.420000),
    (0.999999956692, 2.425000),
    (0.999999959815, 2.430000),
    (0.999999962722, 2.435000),
    (0.999999965427, 2.440000),
    (0.999999967944, 2.445000),
    (0.999999970285, 2.450000),
    (0.999999972461, 2.455000),
    (0.999999974485, 2.460000),
    (0.999999976365, 2.465000),
    (0.999999978113, 2.470000),
    (0.999999979736, 2.475000),
    (0.999999981243, 2.480000),
    (0.999999982643, 2.485000),
    (0.999999983942, 2.490000),
    (0.999999985148, 2.495000),
    (0.999999986266, 2.500000),
    (0.999999987304, 2.505000),
    (0.999999988266, 2.510000),
    (0.999999989158, 2.515000),
    (0.999999989984, 2.520000),
    (0.999999990750, 2.525000),
    (0.999999991460, 2.530000),
    (0.999999992117, 2.535000),
    (0.999999992725, 2.540000),
    (0.999999993288, 2.545000),
    (0.999999993809, 2.550000),
    (0.999999994292, 2.555000),
    (0.999999994737, 2.560000),
    (0.999999995150, 2.565000),
    (0.999999995531, 2.570000),
    (0.999999995883, 2.575000),
    (0.999999996209, 2.580000),
    (0.999999996509, 2.585000),
    (0.999999996787, 2.590000),
    (0.999999997043, 2.595000),
    (0.999999997280, 2.600000),
    (0.999999997498, 2.605000),
    (0.999999997699, 2.610000),
    (0.999999997885, 2.615000),
    (0.999999998056, 2.620000),
    (0.999999998214, 2.625000),
    (0.999999998360, 2.630000),
    (0.999999998494, 2.635000),
    (0.999999998617, 2.640000),
    (0.999999998731, 2.645000),
    (0.999999998835, 2.650000),
    (0.999999998932, 2.655000),
];
